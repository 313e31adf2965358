#
# Copyright 2024-2026 Ghent University
#
# This file is part of vsc-severi,
# originally created by the HPC team of Ghent University (http://ugent.be/hpc/en),
# with support of Ghent University (http://ugent.be/hpc),
# the Flemish Supercomputer Centre (VSC) (https://www.vscentrum.be),
# the Flemish Research Foundation (FWO) (http://www.fwo.be/en)
# and the Department of Economy, Science and Innovation (EWI) (http://www.ewi-vlaanderen.be/en).
#
# https://github.com/hpcugent/vsc-severi
#
# vsc-severi is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation v2.
#
# vsc-severi is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with vsc-severi.  If not, see <http://www.gnu.org/licenses/>.
#
"""
Optionparser for severi
"""
import os

from vsc.utils import fancylogger
from vsc.utils.generaloption import GeneralOption

from vsc.severi.common import SeveriError
from vsc.severi.roots.classify import TYPE_RANKS

COMMANDS = ('verify-algebra', 'verify-geometry', 'classify', 'cremona')
MODELS = ('veronese', 'segre', 'pfaffian', 'exceptional')
EMITS = ('report', 'catalog', 'varieties', 'e6-table', 'an-candidates', 'an-table', 'nonsimple')

DEFAULT_SEED = 20240101
SEED_ENV = 'SEVERI_SEED'


class SeveriParser(GeneralOption.PARSER):
    """Short usage with -u, full help with -U/--help"""
    shorthelp = ('u', '--shorthelp', '--usage',)
    longhelp = ('U', '--help',)


class SeveriOption(GeneralOption):
    """
    Parses commandline options; the first positional argument is the command.
    """
    SETROOTLOGGER = True
    PARSER = SeveriParser
    ALLOPTSMANDATORY = False
    DESCRIPTION = "Severi workbench options"
    # pylint: disable=consider-using-f-string
    OPTIONS = {
        # long option: (description, type, action, default, short option)

        "bound": ("Bound B for random integer coordinates in [-B, B]", "int", "store", 10),

        "emit": ("What classify writes: %s" % ', '.join(EMITS), "choice", "store", 'report', EMITS),

        "fixtures": ("Directory with the reference fixtures (default: packaged fixtures)",
                     "str", "store", None),

        "logtofile": ("redirect the logging to a file (instead of stdout/stderr)", "str", "store", None),

        "max-rank": ("Largest rank of the simple root systems to classify", "int", "store", 8),

        "model": ("Cubic model: %s or all" % ', '.join(MODELS), "choice", "store", 'all',
                  MODELS + ('all',)),

        "out": ("Write the report to this file (default: stdout)", "str", "store", None),

        "retries": ("Retry budget of the samplers", "int", "store", 64),

        "seed": ("Seed of all sampling streams (default: $%s or %s)" % (SEED_ENV, DEFAULT_SEED),
                 "int", "store", None),

        "timing": ("Add wall time to the reports (makes them non-reproducible)", None, "store_true", False),

        "trials": ("Trials per check, before the per-check scaling", "int", "store", 200),

        "types": ("Comma separated root system types (default: all)", "strlist", "store", None),
    }
    # pylint: enable=consider-using-f-string

    def make_init(self):
        """Add the severi options group"""
        self.log.debug("Add option parser: options %s, description %s", self.OPTIONS, self.DESCRIPTION)
        self.add_group_parser(self.OPTIONS, self.DESCRIPTION, prefix='')

    def parseoptions(self, options_list=None):
        """Parse, then send the logging to a file as soon as possible"""
        GeneralOption.parseoptions(self, options_list)

        if self.options.logtofile:
            if os.path.exists(self.options.logtofile):
                os.remove(self.options.logtofile)
            fancylogger.logToFile(self.options.logtofile)
            fancylogger.logToScreen(False)

    def postprocess(self):
        """Validate, resolve the seed and split off the command"""
        opts = self.options

        for name in ('trials', 'bound', 'retries', 'max_rank'):
            if getattr(opts, name) < 1:
                raise SeveriError("--%s must be at least 1, got %s", name.replace('_', '-'), getattr(opts, name))

        if opts.types:
            opts.types = [t.strip().upper() for t in opts.types if t.strip()]
            unknown = [t for t in opts.types if t not in TYPE_RANKS]
            if unknown:
                raise SeveriError("Unknown root system types %s (known: %s)", unknown, ', '.join(sorted(TYPE_RANKS)))

        if opts.seed is None:
            opts.seed = int(os.environ.get(SEED_ENV, DEFAULT_SEED))
            self.log.debug("seed %s (from %s)", opts.seed, SEED_ENV if SEED_ENV in os.environ else 'default')

        if not self.args:
            raise SeveriError("No command given, expected one of %s", ', '.join(COMMANDS))
        self.command = self.args[0]
        if self.command not in COMMANDS:
            raise SeveriError("Unknown command %s, expected one of %s", self.command, ', '.join(COMMANDS))
        self.command_args = self.args[1:]

        self.log.debug("final options: %s", opts)

    @property
    def models(self):
        """Selected model names"""
        if self.options.model == 'all':
            return list(MODELS)
        return [self.options.model]

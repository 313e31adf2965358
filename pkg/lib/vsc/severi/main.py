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
CLI main functions: verify-algebra, verify-geometry, classify and cremona
"""
import logging
import sys

from vsc.severi.common import SeveriError, fmt_rational
from vsc.severi.cubic.space import get_model
from vsc.severi.geometry import duality
from vsc.severi.option import MODELS, SeveriOption
from vsc.severi.report import VerificationReport, compare_fixture, dumps, write
from vsc.severi.roots import classify
from vsc.severi.roots.rootsystem import build, parse_label
from vsc.severi.suite import AlgebraSuite, CompositionSuite, GeometrySuite, run_composition, run_models

# A5 and E6 are needed for the four varieties
FULL_RANK = 6
AN_RANKS = range(2, 9)
FIXTURES = ('varieties', 'catalog', 'e6-table', 'an-candidates', 'an-table', 'nonsimple')


def suite_kwargs(options):
    return {
        'trials': options.trials,
        'bound': options.bound,
        'retries': options.retries,
        'timing': options.timing,
    }


def cmd_verify_algebra(optparser):
    """Composition algebra laws and the cubic model identities; returns (reports, ok)"""
    opts = optparser.options
    reports = run_composition(CompositionSuite(opts.seed, **suite_kwargs(opts)))
    reports.extend(run_models(AlgebraSuite(opts.seed, **suite_kwargs(opts)), optparser.models))
    return reports, all(r.ok for r in reports)


def cmd_verify_geometry(optparser):
    """Secants, duality, entry loci and homogeneity; returns (reports, ok)"""
    opts = optparser.options
    reports = run_models(GeometrySuite(opts.seed, **suite_kwargs(opts)), optparser.models)
    return reports, all(r.ok for r in reports)


def selected(label, max_rank, types):
    """Is the root system label (or a product label like A2xA2) within max_rank and types"""
    for part in label.split('x'):
        kind, rank = parse_label(part)
        if rank > max_rank or (types and kind not in types):
            return False
    return True


class Classification:
    """Everything classify computes for one (max_rank, types) selection"""

    def __init__(self, max_rank, types=None):
        self.max_rank = max_rank
        self.types = types
        self.systems = classify.root_systems(max_rank, types=types)
        self.catalog = sorted(classify.deficient_catalog(max_rank, types=types),
                              key=lambda r: (r.rs.TYPE, r.rs.rank, r.weight.coeffs))
        self.varieties = classify.classify_all(max_rank, types=types)
        self.partial = max_rank < FULL_RANK or bool(types and not {'A', 'E'} <= set(types))
        if self.partial:
            logging.warning("classification up to rank %s (types %s) is partial: %s varieties",
                            max_rank, types or 'all', len(self.varieties))
        self.has_e6 = selected('E6', max_rank, types)
        self.has_product = selected('A2xA2', max_rank, types)
        self.an_labels = [f'A{n}' for n in AN_RANKS if selected(f'A{n}', max_rank, types)]

    def e6_table(self):
        return {'note': classify.E6_NOTE, 'rows': classify.e6_table()} if self.has_e6 else {}

    def an_candidates(self):
        res = {}
        for label in self.an_labels:
            rs = build(*parse_label(label))
            res[label] = sorted(classify.fmt_weight(r.weight.coeffs) for r in classify.candidate_weights(rs))
        return {'note': classify.AN_NOTE, 'candidates': res}

    def an_table(self):
        values = {label: classify.an_table(build(*parse_label(label))) for label in self.an_labels}
        return {'note': classify.AN_NOTE, 'values': values}

    def nonsimple(self):
        return [sol.to_dict() for sol in classify.nonsimple_solve()] if self.has_product else []

    def emit(self, what):
        """The data written by --emit what"""
        if what == 'catalog':
            return [r.to_fixture() for r in self.catalog]
        if what == 'varieties':
            return [r.to_fixture() for r in self.varieties]
        if what == 'e6-table':
            return self.e6_table()
        if what == 'an-candidates':
            return self.an_candidates()
        if what == 'an-table':
            return self.an_table()
        if what == 'nonsimple':
            return self.nonsimple()
        raise SeveriError("Nothing to emit for %s", what)

    def expected(self, what, fixture):
        """The part of a fixture inside the selection"""
        if what in ('catalog', 'varieties'):
            return [e for e in fixture if selected(e['type'], self.max_rank, self.types)]
        if what in ('an-candidates', 'an-table'):
            key = 'candidates' if what == 'an-candidates' else 'values'
            return {'note': fixture['note'], key: {k: v for k, v in fixture[key].items() if k in self.an_labels}}
        if what == 'e6-table':
            return fixture if self.has_e6 else {}
        return fixture if self.has_product else []

    def compare(self, what, fixture_dir=None):
        """(match, diff) against fixtures/<what>.json"""
        return compare_fixture(what.replace('-', '_'), self.emit(what), fixture_dir=fixture_dir,
                               select=lambda fixture: self.expected(what, fixture))

    def report(self, seed, fixture_dir=None):
        """VerificationReport with the fixture comparisons and the root system checks"""
        report = VerificationReport('classify', f'rank<={self.max_rank}', seed, extra={
            'partial': self.partial,
            'types': self.types or sorted(classify.TYPE_RANKS),
            'catalog_size': len(self.catalog),
            'varieties': [r.to_dict() for r in self.varieties],
            'nonsimple': self.nonsimple(),
            'product_note': classify.PRODUCT_NOTE,
        })
        for trial, what in enumerate(FIXTURES):
            match, diff = self.compare(what, fixture_dir=fixture_dir)
            report.record('fixtures').add(trial, match, {'fixture': what}, error=diff or None)

        for trial, rs in enumerate(self.systems):
            inputs = {'type': rs.label}
            report.record('w0_descent').add(trial, classify.w0_descent_check(rs), inputs)
            report.record('boundary_layer').add(trial, classify.boundary_check(rs), inputs)

        for trial, cand in enumerate(self.catalog):
            inputs = {'type': cand.rs.label, 'weight': list(cand.weight.coeffs)}
            if cand.rs.TYPE == 'A':
                report.record('an_constraint').add(trial, classify.an_constraint(cand.rs, cand.witnesses), inputs)
            elif cand.rs.label == 'E6':
                report.record('e6_eighth_coordinate').add(
                    trial, classify.e6_eighth_coordinate(cand.witnesses), inputs)
        return report


def cmd_classify(optparser):
    """
    Run the classification; returns (output, ok).

    With --emit report (the default) the output is a list with one VerificationReport,
    otherwise the emitted data itself; ok means every fixture comparison matched.
    """
    opts = optparser.options
    classification = Classification(opts.max_rank, types=opts.types)
    if opts.emit == 'report':
        report = classification.report(opts.seed, fixture_dir=opts.fixtures)
        return [report], report.ok
    match, _ = classification.compare(opts.emit, fixture_dir=opts.fixtures)
    return classification.emit(opts.emit), match


def regime(model, w):
    if model.det(w) != 0:
        return 'off Sec'
    if model.is_on_X(w):
        return 'total-transform regime'
    return 'on Sec-X'


def fmt_vector(vec):
    return ','.join(fmt_rational(x) for x in vec)


def cremona_lines(model, w):
    """Text report of the Cremona data of one point"""
    det = model.det(w)
    lines = [
        f"coords={','.join(model.COORDINATE_NAMES)}",
        f"det={fmt_rational(det)}",
        f"grad={fmt_vector(model.grad(w))}",
        f"sharp={fmt_vector(model.sharp(w))}",
        f"regime={regime(model, w)}",
    ]
    ok = True
    if det != 0:
        ok = duality.involution_check(model, w)
        lines.append(f"involution={'ok' if ok else 'FAILED'}")
    return lines, ok


def cmd_cremona(optparser):
    """cremona [model] c1,c2,...; the model defaults to --model"""
    args = optparser.command_args
    if len(args) == 2:
        name, coords = args
    elif len(args) == 1:
        name, coords = optparser.options.model, args[0]
    else:
        raise SeveriError("cremona needs [model] and a comma separated coordinate list, got %s", args)
    if name not in MODELS:
        raise SeveriError("cremona needs one model (one of %s), got %s", ', '.join(MODELS), name)
    model = get_model(name)
    w = model.point([x.strip() for x in coords.split(',')])
    return cremona_lines(model, w)


COMMANDS = {
    'verify-algebra': cmd_verify_algebra,
    'verify-geometry': cmd_verify_geometry,
    'classify': cmd_classify,
    'cremona': cmd_cremona,
}


def output(optparser, result):
    """Write the result of a command to --out or stdout"""
    out = optparser.options.out
    if optparser.command == 'cremona':
        text = '\n'.join(result) + '\n'
    elif isinstance(result, list) and result and isinstance(result[0], VerificationReport):
        text = write(result)
    else:
        text = dumps(result)
    if out:
        with open(out, 'w') as fh:
            fh.write(text)
        logging.info("output written to %s", out)
    else:
        sys.stdout.write(text)


def run(optparser):
    """Run the command; True iff every check passed and every fixture matched"""
    result, ok = COMMANDS[optparser.command](optparser)
    output(optparser, result)
    if not ok:
        logging.error("%s: failed checks or fixture mismatches", optparser.command)
    return ok


def main():
    """Main function"""
    try:
        optparser = SeveriOption()
        ok = run(optparser)
    except Exception as err:
        logging.error(err)
        sys.exit(1)
    sys.exit(0 if ok else 1)

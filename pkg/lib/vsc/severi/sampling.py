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
Seeded random streams.

Every trial draws from its own numpy PCG64 generator, keyed by (seed, suite, model, check, trial):
the seed is the entropy of a numpy SeedSequence, the other keys become its spawn key. A report
therefore does not depend on the order in which checks or models are run.
"""
import zlib
from fractions import Fraction

import numpy as np


def stream_key(*names):
    """Stable integer key for a name (crc32, not the salted builtin hash)"""
    return tuple(zlib.crc32(str(name).encode('utf8')) for name in names)


def stream(seed, suite, model, check, trial):
    """Independent numpy Generator (PCG64) for one trial of one check"""
    seq = np.random.SeedSequence(entropy=int(seed), spawn_key=stream_key(suite, model, check) + (int(trial),))
    return np.random.Generator(np.random.PCG64(seq))


def random_int(rng, bound):
    """Uniform integer in [-bound, bound]"""
    return int(rng.integers(-bound, bound + 1))


def random_nonzero_int(rng, bound):
    """Uniform nonzero integer in [-bound, bound]"""
    value = int(rng.integers(1, bound + 1))
    return value if rng.integers(2) else -value


def random_rational(rng, bound):
    """Nonzero rational p/q with 0 < |p| <= bound, 0 < q <= bound"""
    return Fraction(random_nonzero_int(rng, bound), int(rng.integers(1, bound + 1)))


def random_vector(rng, size, bound):
    """Integer vector with entries in [-bound, bound], as Fractions"""
    return [Fraction(int(x)) for x in rng.integers(-bound, bound + 1, size=size)]


def choice(rng, items):
    """One element of a sequence"""
    return items[int(rng.integers(len(items)))]

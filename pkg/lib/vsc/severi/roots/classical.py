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
Classical root systems A_n, B_n, C_n, D_n (Bourbaki, Planches I-IV).
"""
from vsc.severi.roots.rootsystem import RootSystem, add, sub, unit


def _eps(size):
    return [unit(size, i) for i in range(size)]


def _chain(eps, count):
    """epsilon_i - epsilon_(i+1), i = 1 .. count"""
    return [sub(eps[i], eps[i + 1]) for i in range(count)]


def _pm_pairs(eps, rank):
    """epsilon_i - epsilon_j and epsilon_i + epsilon_j, i < j <= rank"""
    roots = []
    for i in range(rank):
        for j in range(i + 1, rank):
            roots.append(sub(eps[i], eps[j]))
            roots.append(add(eps[i], eps[j]))
    return roots


class TypeA(RootSystem):
    """SL(n+1), in the hyperplane sum = 0 of an (n+1)-dimensional space"""
    HIDDEN = False
    TYPE = 'A'
    MIN_RANK = 1
    COXETER = staticmethod(lambda n: n + 1)

    def _simple_roots(self):
        return _chain(_eps(self.rank + 1), self.rank)

    def _positive_roots(self):
        eps = _eps(self.rank + 1)
        return [sub(eps[i], eps[j]) for i in range(self.rank + 1) for j in range(i + 1, self.rank + 1)]

    def expected_positive_count(self):
        return self.rank * (self.rank + 1) // 2

    def _theta(self):
        return list(reversed(range(self.rank)))


class TypeB(RootSystem):
    """SO(2n+1)"""
    HIDDEN = False
    TYPE = 'B'
    MIN_RANK = 2
    COXETER = staticmethod(lambda n: 2 * n)

    def _simple_roots(self):
        eps = _eps(self.rank)
        return _chain(eps, self.rank - 1) + [eps[-1]]

    def _positive_roots(self):
        eps = _eps(self.rank)
        return _pm_pairs(eps, self.rank) + eps

    def expected_positive_count(self):
        return self.rank ** 2


class TypeC(RootSystem):
    """Sp(2n)"""
    HIDDEN = False
    TYPE = 'C'
    MIN_RANK = 3
    COXETER = staticmethod(lambda n: 2 * n)

    def _simple_roots(self):
        eps = _eps(self.rank)
        return _chain(eps, self.rank - 1) + [add(eps[-1], eps[-1])]

    def _positive_roots(self):
        eps = _eps(self.rank)
        return _pm_pairs(eps, self.rank) + [add(e, e) for e in eps]

    def expected_positive_count(self):
        return self.rank ** 2


class TypeD(RootSystem):
    """SO(2n); for odd n the longest element swaps the two fork nodes"""
    HIDDEN = False
    TYPE = 'D'
    MIN_RANK = 4
    COXETER = staticmethod(lambda n: 2 * n - 2)

    def _simple_roots(self):
        eps = _eps(self.rank)
        return _chain(eps, self.rank - 1) + [add(eps[-2], eps[-1])]

    def _positive_roots(self):
        return _pm_pairs(_eps(self.rank), self.rank)

    def expected_positive_count(self):
        return self.rank * (self.rank - 1)

    def _theta(self):
        theta = list(range(self.rank))
        if self.rank % 2:
            theta[-2], theta[-1] = theta[-1], theta[-2]
        return theta

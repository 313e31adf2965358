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
Classification of Severi varieties among closed orbits of highest weight vectors.

A highest weight orbit X in P(V) has a deficient secant variety only if lambda - w0(lambda) is a sum of
two positive roots. Since <lambda - w0 lambda, rho_vee> = 2 <lambda, rho_vee> and every positive root
has height at most h - 1, only dominant weights with <lambda, rho_vee> <= h - 1 can qualify: the search
below is finite and complete.
"""
import logging
from fractions import Fraction

from vsc.severi import linalg
from vsc.severi.common import SeveriError
from vsc.severi.geometry.terracini import Segre, SegreVeronese, terracini_dim
from vsc.severi.roots.rootsystem import build, sub
from vsc.severi.sampling import stream

TYPE_RANKS = {
    'A': (1, None),
    'B': (2, None),
    'C': (3, None),
    'D': (4, None),
    'E': (6, 8),
    'F': (4, 4),
    'G': (2, 2),
}

NONSIMPLE_BOX = 9  # n_i <= NONSIMPLE_BOX, delta_i <= 3
NONSIMPLE_DELTA = 3
PRODUCT_NOTE = ("products of three or more factors are excluded: the positivity argument applies to every pair "
                "of factors")
E6_NOTE = ("rows are omega_i - w0(omega_i); the published table is headed omega_i + w0(omega_i) but lists "
           "these values")
AN_NOTE = ("w0 is the longest Weyl group element, w0(omega_i) = -omega_{n+1-i}, not -Id as the published A_n "
           "text states; the negative block of omega_i - w0(omega_i) starts at e_{n+2-i}, the published "
           "display starts it at e_{n+1-i}")


def fmt_weight(coeffs):
    """'2w1', 'w1+w5', '0'"""
    parts = []
    for i, c in enumerate(coeffs):
        if c:
            parts.append(f"{'' if c == 1 else c}w{i + 1}")
    return '+'.join(parts) or '0'


class DominantWeight:
    """sum c_i omega_i with c_i >= 0, not all zero"""

    def __init__(self, rs, coeffs):
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) != rs.rank or any(c < 0 for c in coeffs) or not any(coeffs):
            raise SeveriError("Not a nonzero dominant weight of %s: %s", rs.label, coeffs)
        self.rs = rs
        self.coeffs = coeffs
        self.coords = rs.weight(coeffs)

    @property
    def dual(self):
        """-w0(lambda), as a DominantWeight"""
        image = [0] * self.rs.rank
        for i, c in enumerate(self.coeffs):
            image[self.rs.theta[i]] = c
        return DominantWeight(self.rs, image)

    def __eq__(self, other):
        return isinstance(other, DominantWeight) and self.rs.label == other.rs.label and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.rs.label, self.coeffs))

    def __repr__(self):
        return f"{self.rs.label}:{fmt_weight(self.coeffs)}"


class CandidateReport:
    """A (root system, highest weight) with its witnesses (alpha, beta), dimensions and verdict"""

    def __init__(self, rs, weight, witnesses):
        self.rs = rs
        self.weight = weight
        self.witnesses = witnesses
        self.orbit_dim = orbit_dim(rs, weight)
        self.dim_v = weyl_dim(rs, weight)
        self.m = self.dim_v - 1
        self.severi_condition = Fraction(self.m) == Fraction(3 * self.orbit_dim, 2) + 2
        self.adjoint = adjoint_exclusion(rs, weight, witnesses)
        self.identification = identify(rs, weight)
        if self.adjoint:
            self.verdict = 'excluded'
            self.reason = 'adjoint orbit: dim Sec(X) = 2 dim X, the only witness is (theta, theta)'
        elif self.severi_condition:
            self.verdict = 'severi'
            self.reason = 'm = 3n/2 + 2'
        else:
            self.verdict = 'rejected'
            self.reason = f'm = {self.m} != 3n/2 + 2 = {Fraction(3 * self.orbit_dim, 2) + 2}'
        for alpha, beta in witnesses:
            if tuple(a + b for a, b in zip(alpha, beta)) != sub(weight.coords, rs.w0(weight.coords)):
                raise SeveriError("Invalid witness (%s, %s) for %s", alpha, beta, weight)

    def to_fixture(self):
        """Fields that are compared against the catalog fixture"""
        return {
            'type': self.rs.label,
            'weight': list(self.weight.coeffs),
            'identification': self.identification,
            'n': self.orbit_dim,
            'dim': self.dim_v,
        }

    def to_dict(self):
        res = self.to_fixture()
        res.update({
            'name': fmt_weight(self.weight.coeffs),
            'm': self.m,
            'severi_condition': self.severi_condition,
            'verdict': self.verdict,
            'reason': self.reason,
            'witnesses': len(self.witnesses),
        })
        return res

    def __repr__(self):
        return f"CandidateReport({self.weight}, n={self.orbit_dim}, dim={self.dim_v}, {self.verdict})"


def w0_action(rs, weight):
    """Coordinates of w0(lambda)"""
    return rs.w0(weight.coords)


def _weights_up_to(rs, limit):
    """Nonzero dominant weights with <lambda, rho_vee> <= limit"""
    heights = [rs.height(w) for w in rs.fundamental_weights]

    def extend(prefix, budget):
        idx = len(prefix)
        if idx == rs.rank:
            if any(prefix):
                yield tuple(prefix)
            return
        c = 0
        while c * heights[idx] <= budget:
            yield from extend(prefix + [c], budget - c * heights[idx])
            c += 1

    return [DominantWeight(rs, coeffs) for coeffs in extend([], Fraction(limit))]


def enumerate_weights(rs):
    """Dominant weights that can satisfy lambda - w0 lambda = alpha + beta"""
    return _weights_up_to(rs, rs.coxeter_number - 1)


def boundary_layer(rs):
    """Dominant weights with h - 1 < <lambda, rho_vee> <= h, just past the enumeration bound"""
    h = rs.coxeter_number
    return [w for w in _weights_up_to(rs, h) if rs.height(w.coords) > h - 1]


def boundary_check(rs):
    """No weight just past the enumeration bound has a witness"""
    return not any(witnesses(rs, weight) for weight in boundary_layer(rs))


def w0_descent_check(rs):
    """w0 on the fundamental weights agrees with reflection descent to the antidominant chamber"""
    return all(rs.antidominant(omega) == rs.w0(omega) for omega in rs.fundamental_weights)


def witnesses(rs, weight):
    """
    All pairs (alpha, beta) of positive roots, alpha <= beta in height order,
    with alpha + beta = lambda - w0 lambda
    """
    target = sub(weight.coords, rs.w0(weight.coords))
    index = {alpha: i for i, alpha in enumerate(rs.positive_roots)}
    found = []
    for alpha in rs.positive_roots:
        beta = sub(target, alpha)
        if beta in index and index[alpha] <= index[beta]:
            found.append((alpha, beta))
    return found


def candidate_weights(rs):
    """CandidateReports for all dominant weights with at least one witness"""
    res = []
    for weight in enumerate_weights(rs):
        pairs = witnesses(rs, weight)
        if pairs:
            res.append(CandidateReport(rs, weight, pairs))
        else:
            logging.debug("%s: no witness for %s", rs.label, weight)
    logging.debug("%s: %s candidate weights", rs.label, len(res))
    return res


def orbit_dim(rs, weight):
    """#{alpha > 0 : (lambda, alpha) != 0}"""
    return sum(1 for alpha in rs.positive_roots if linalg.dot(weight.coords, alpha) != 0)


def weyl_dim(rs, weight):
    """prod (lambda + rho, alpha) / (rho, alpha) over the positive roots"""
    shifted = tuple(a + b for a, b in zip(weight.coords, rs.rho))
    res = Fraction(1)
    for alpha in rs.positive_roots:
        res *= linalg.dot(shifted, alpha) / linalg.dot(rs.rho, alpha)
    if res.denominator != 1 or res <= 0:
        raise SeveriError("Weyl dimension of %s is not a positive integer: %s", weight, res)
    return int(res)


def adjoint_exclusion(rs, weight, pairs=None):
    """lambda is the highest root and (theta, theta) is the only witness"""
    if pairs is None:
        pairs = witnesses(rs, weight)
    theta = rs.highest_root
    return weight.coords == theta and pairs == [(theta, theta)]


def an_constraint(rs, pairs):  # pylint: disable=unused-argument
    """For A_n: every alpha + beta has sum |s_i| <= 4"""
    return all(sum(abs(a + b) for a, b in zip(alpha, beta)) <= 4 for alpha, beta in pairs)


def e6_eighth_coordinate(pairs):
    """For E6: the eighth coordinate of alpha + beta is 0, 1/2 or 1"""
    return all(alpha[7] + beta[7] in (0, Fraction(1, 2), 1) for alpha, beta in pairs)


def e6_table():
    """omega_i - w0(omega_i) for the six fundamental weights of E6"""
    rs = build('E', 6)
    rows = []
    for i in range(6):
        weight = DominantWeight(rs, [int(i == j) for j in range(6)])
        rows.append(sub(weight.coords, rs.w0(weight.coords)))
    return rows


def an_table(rs):
    """omega_i - w0(omega_i) for the fundamental weights of A_n, by weight name"""
    res = {}
    for i in range(rs.rank):
        weight = DominantWeight(rs, [int(i == j) for j in range(rs.rank)])
        res[fmt_weight(weight.coeffs)] = sub(weight.coords, rs.w0(weight.coords))
    return res


def an_closed_form(n, i):
    """e_1 + ... + e_i - e_{n+2-i} - ... - e_{n+1} in the n+1 coordinates of A_n"""
    return [Fraction(int(k < i) - int(k >= n + 1 - i)) for k in range(n + 1)]


def identify(rs, weight):
    """Name of the family of the orbit of a candidate weight, None if unknown"""
    kind, n = rs.TYPE, rs.rank
    coeffs = weight.coeffs
    pos = [i for i, c in enumerate(coeffs) if c]
    if len(pos) == 1:
        node, c = pos[0] + 1, coeffs[pos[0]]
    else:
        node, c = None, None

    if rs.highest_root == weight.coords:
        return 'adjoint'

    if kind == 'A':
        if c == 1 and node in (1, n):
            return f'projective space P{n}'
        if c == 2 and node in (1, n):
            return f'veronese nu2(P{n})'
        if c == 1 and node in (2, n - 1):
            return f'grassmannian G(2,{n + 1})'
    elif kind == 'B':
        if c == 1 and node == 1:
            return f'quadric Q{2 * n - 1}'
        if c == 1 and node == n:
            return {2: 'projective space P3', 3: 'quadric Q6', 4: 'spinor variety S10'}.get(n)
    elif kind == 'C':
        if c == 1 and node == 1:
            return f'projective space P{2 * n - 1}'
        if c == 1 and node == 2:
            return f'isotropic grassmannian IG(2,{2 * n})'
    elif kind == 'D':
        if c == 1 and node == 1:
            return f'quadric Q{2 * n - 2}'
        if c == 1 and node in (n - 1, n):
            return {4: 'quadric Q6', 5: 'spinor variety S10'}.get(n)
    elif kind == 'E':
        if n == 6 and c == 1 and node in (1, 6):
            return 'E6 minimal orbit'
    elif kind == 'F':
        if c == 1 and node == 4:
            return 'F4 minimal orbit'
    elif kind == 'G':
        if c == 1 and node == 1:
            return 'quadric Q5'
    return None


def root_systems(max_rank, types=None):
    """All simple root systems of rank <= max_rank, for the given type letters"""
    res = []
    for kind, (lo, hi) in sorted(TYPE_RANKS.items()):
        if types and kind not in types:
            continue
        top = max_rank if hi is None else min(hi, max_rank)
        for rank in range(lo, top + 1):
            res.append(build(kind, rank))
    return res


def deficient_catalog(max_rank, types=None):
    """Candidate reports for every simple type up to max_rank"""
    res = []
    for rs in root_systems(max_rank, types=types):
        res.extend(candidate_weights(rs))
    return res


class NonSimpleSolution:
    """(n1, delta1, n2, delta2) solving the product equation, with its verdict"""

    VERDICTS = {
        (2, 1, 2, 1): ('accepted', 'segre P2 x P2'),
        (1, 2, 1, 1): ('rejected', 'P1 x nu2(P1)'),
        (1, 1, 5, 1): ('rejected', 'segre P1 x P5'),
    }

    def __init__(self, n1, delta1, n2, delta2):
        self.key = (n1, delta1, n2, delta2)
        self.verdict, self.identification = self.VERDICTS.get(self.key, ('unknown', None))
        self.n = n1 + n2
        self.terracini = None
        self.ambient = None

    def to_dict(self):
        return {
            'n1': self.key[0], 'delta1': self.key[1], 'n2': self.key[2], 'delta2': self.key[3],
            'verdict': self.verdict,
            'identification': self.identification,
            'terracini': self.terracini,
            'ambient': self.ambient,
        }

    def __repr__(self):
        return f"NonSimpleSolution{self.key}: {self.verdict}"


def nonsimple_equation(n1, delta1, n2, delta2):
    """Twice n1 n2 + (delta2 - 3/2) n1 + (delta1 - 3/2) n2 + (delta1 delta2 - 3)"""
    return 2 * n1 * n2 + (2 * delta2 - 3) * n1 + (2 * delta1 - 3) * n2 + 2 * delta1 * delta2 - 6


def nonsimple_ordered_solutions(box=NONSIMPLE_BOX, delta_box=NONSIMPLE_DELTA):
    """All ordered solutions inside the search box"""
    return [(n1, d1, n2, d2)
            for n1 in range(1, box + 1) for d1 in range(1, delta_box + 1)
            for n2 in range(1, box + 1) for d2 in range(1, delta_box + 1)
            if nonsimple_equation(n1, d1, n2, d2) == 0]


def canonical_solution(sol):
    """Factor with the larger delta first; equal deltas: smaller n first"""
    n1, d1, n2, d2 = sol
    if (d2, -n2) > (d1, -n1):
        return (n2, d2, n1, d1)
    return sol


def nonsimple_solve():
    """The solution families of the product equation, each cross-checked with Terracini"""
    families = {
        (2, 1, 2, 1): Segre(2, 2),
        (1, 2, 1, 1): SegreVeronese(),
        (1, 1, 5, 1): Segre(1, 5),
    }
    ordered = nonsimple_ordered_solutions()
    if any(max(s[0], s[2]) == NONSIMPLE_BOX or max(s[1], s[3]) == NONSIMPLE_DELTA for s in ordered):
        raise SeveriError("nonsimple solution on the boundary of the search box: %s", ordered)
    res = []
    for key in sorted({canonical_solution(s) for s in ordered}):
        sol = NonSimpleSolution(*key)
        family = families.get(key)
        if family is not None:
            # fixed stream: the classification does not depend on --seed
            rng = stream(0, 'classify', 'nonsimple', 'terracini', sum(key))
            sol.terracini = max(terracini_dim(family, family.random_params(rng, 5), family.random_params(rng, 5))
                                for _ in range(4))
            sol.ambient = family.ambient_dim()
            fills = sol.terracini == sol.ambient
            if fills != (sol.verdict == 'rejected'):
                raise SeveriError("Terracini dimension %s (ambient %s) contradicts verdict of %s",
                                  sol.terracini, sol.ambient, sol)
        res.append(sol)
    return res


class ProductReport:
    """A non-simple Severi variety P^n1 x P^n2, from an accepted product solution"""

    def __init__(self, solution):
        self.solution = solution
        n1, _, n2, _ = solution.key
        self.factors = (n1, n2)
        self.orbit_dim = solution.n
        # Segre embedding of P^n1 x P^n2
        self.dim_v = (n1 + 1) * (n2 + 1)
        self.m = self.dim_v - 1

    @property
    def label(self):
        return 'x'.join(f'A{n}' for n in self.factors)

    @property
    def weight(self):
        """omega_1 on each A_n factor"""
        return [int(i == 0) for n in self.factors for i in range(n)]

    def to_fixture(self):
        return {'type': self.label, 'weight': self.weight, 'identification': self.solution.identification,
                'n': self.orbit_dim, 'dim': self.dim_v}

    def to_dict(self):
        res = self.to_fixture()
        res.update({'m': self.m, 'verdict': 'severi', 'name': 'w1+w1\'', 'reason': PRODUCT_NOTE})
        return res


def classify_all(max_rank, types=None):
    """
    The Severi varieties among highest weight orbits of groups of rank <= max_rank:
    one representative per duality class (lambda and -w0 lambda give projectively equivalent orbits).
    """
    found = {}
    for report in deficient_catalog(max_rank, types=types):
        if report.verdict != 'severi':
            continue
        rep = max(report.weight.coeffs, report.weight.dual.coeffs)
        key = (report.rs.label, rep)
        if key not in found:
            if rep != report.weight.coeffs:
                report = CandidateReport(report.rs, DominantWeight(report.rs, rep),
                                         witnesses(report.rs, DominantWeight(report.rs, rep)))
            found[key] = report
    res = [found[key] for key in sorted(found)]
    if max_rank >= 2 and (not types or 'A' in types):
        for sol in nonsimple_solve():
            if sol.verdict == 'accepted':
                res.append(ProductReport(sol))
    return sorted(res, key=lambda r: (r.orbit_dim, r.to_fixture()['type']))

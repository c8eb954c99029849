#
#  Copyright (c) 2022 IBM Corp.
#  Licensed under the Apache License, Version 2.0 (the "License");
#  you may not use this file except in compliance with the License.
#  You may obtain a copy of the License at
#
#  http://www.apache.org/licenses/LICENSE-2.0
#
#  Unless required by applicable law or agreed to in writing, software
#  distributed under the License is distributed on an "AS IS" BASIS,
#  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#  See the License for the specific language governing permissions and
#  limitations under the License.
#

import itertools
import logging
import random

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import List, Optional, Sequence, Tuple

import numpy as np
from sympy import Matrix, eye, ilcm

from genus_zero_brauer.definitions import DEFAULT_TOWER_DEPTH
from genus_zero_brauer.torsion_core.descriptors import DescriptorMismatchException, GroupDescriptor, \
    InvolutionSpec, NotAnInvolutionException, Summand
from genus_zero_brauer.torsion_core.elements import apply_action, pruefer_vector
from genus_zero_brauer.torsion_core.towers import Tower

Vector = Tuple[int, ...]

EXHAUSTIVE_CHECK_LIMIT = 16


def _mod2(vectors: Sequence[Sequence[int]]) -> np.ndarray:
    return np.array([[int(v) % 2 for v in vec] for vec in vectors], dtype=np.uint8)


class _GF2Span:
    """incremental row echelon form over the two-element field"""
    def __init__(self, width: int):
        self.width = width
        self.rows: List[Tuple[int, np.ndarray]] = []

    def reduce(self, v: np.ndarray) -> np.ndarray:
        v = v.copy() % 2
        for pivot, row in self.rows:
            if v[pivot]:
                v ^= row
        return v

    def insert(self, v: np.ndarray) -> bool:
        reduced = self.reduce(np.asarray(v, dtype=np.uint8))
        nonzero = np.flatnonzero(reduced)
        if nonzero.size == 0:
            return False
        pivot = int(nonzero[0])
        for i, (p, row) in enumerate(self.rows):
            if row[pivot]:
                self.rows[i] = (p, row ^ reduced)
        self.rows.append((pivot, reduced))
        return True

    @property
    def dimension(self) -> int:
        return len(self.rows)


def _gf2_dependencies(vectors: np.ndarray) -> List[np.ndarray]:
    """a basis of the space of coefficient vectors eps with sum(eps_i * v_i) == 0 over the two-element field"""
    count = vectors.shape[0]
    augmented = np.concatenate([vectors % 2, np.identity(count, dtype=np.uint8)], axis=1).astype(np.uint8)
    width = vectors.shape[1]
    row = 0
    for col in range(width):
        candidates = [i for i in range(row, count) if augmented[i, col]]
        if not candidates:
            continue
        augmented[[row, candidates[0]]] = augmented[[candidates[0], row]]
        for i in range(count):
            if i != row and augmented[i, col]:
                augmented[i] ^= augmented[row]
        row += 1
    return [augmented[i, width:].copy() for i in range(row, count)]


def _primitive(v: Sequence[int]) -> List[int]:
    content = 0
    for x in v:
        content = gcd(content, int(x))
    return [int(x) // content for x in v] if content > 1 else [int(x) for x in v]


def integer_kernel(m: np.ndarray) -> List[List[int]]:
    """a basis of the kernel of m over Q, scaled to primitive integer vectors"""
    basis = []
    for v in Matrix(m.tolist()).nullspace():
        entries = [Fraction(int(x.p), int(x.q)) for x in v]
        scale = ilcm(*[e.denominator for e in entries]) if len(entries) > 1 else entries[0].denominator
        basis.append(_primitive([int(e * scale) for e in entries]))
    return basis


def saturate_at_two(basis: List[List[int]]) -> List[List[int]]:
    """
    Enlarge the lattice spanned by *basis* until its reduction mod 2 has full rank: every mod 2 dependency
    sum(eps_i * b_i) == 0 lets one b_j with eps_j = 1 be replaced by the half of that sum.
    """
    basis = [list(b) for b in basis]
    while basis:
        dependencies = _gf2_dependencies(_mod2(basis))
        if not dependencies:
            return basis
        eps = dependencies[0]
        j = int(np.flatnonzero(eps)[0])
        combination = [sum(int(eps[i]) * basis[i][k] for i in range(len(basis))) for k in range(len(basis[0]))]
        assert all(c % 2 == 0 for c in combination)
        basis[j] = [c // 2 for c in combination]
    return basis


@dataclass
class InpDecomposition:
    """
    Towers spanning the divisible subgroups I, N and P of (Q_2/Z_2)^r under an involution M: the action fixes
    the I towers, negates the N towers and exchanges the two towers of every P pair. Each tower is
    alpha_i(b) = b / 2^(i+1) for an integer vector b; the vectors together form a basis of Z_2^r.
    """
    descriptor: GroupDescriptor
    fixed_basis: List[Vector]
    neg_basis: List[Vector]
    pair_basis: List[Tuple[Vector, Vector]]
    depth: int

    @property
    def rank(self) -> int:
        return self.descriptor.rank

    def basis_vectors(self) -> List[Vector]:
        return self.fixed_basis + self.neg_basis + [v for pair in self.pair_basis for v in pair]

    def basis_matrix(self) -> np.ndarray:
        """the basis vectors as columns"""
        return np.array(self.basis_vectors(), dtype=object).T

    def tower(self, vector: Sequence[int]) -> Tower:
        return Tower(self.descriptor,
                     generator=lambda i: pruefer_vector(self.descriptor, [Fraction(c, 2 ** (i + 1)) for c in vector]))

    def fixed_towers(self) -> List[Tower]:
        return [self.tower(b) for b in self.fixed_basis]

    def neg_towers(self) -> List[Tower]:
        return [self.tower(b) for b in self.neg_basis]

    def pair_towers(self) -> List[Tuple[Tower, Tower]]:
        return [(self.tower(v), self.tower(w)) for v, w in self.pair_basis]


def inp_decompose(r: int, m: Sequence[Sequence[int]], depth: int = DEFAULT_TOWER_DEPTH) -> InpDecomposition:
    """
    Split (Q_2/Z_2)^r = I + N + P for the involution given by the integer matrix m. Over the 2-torsion V:
    the reductions F and N of the saturated lattices ker(M-1) and ker(M+1) meet in a space whose dimension is
    the number of P pairs; W_1 and W_-1 are complements of F n N in F and N, and V_P is a complement of F + N
    in V, each chosen by pivoting in input order. V_P yields the pairs (v, Mv).
    """
    matrix = tuple(tuple(int(x) for x in row) for row in m)
    if len(matrix) != r:
        raise NotAnInvolutionException(f"expected {r} rows, got {len(matrix)}")
    descriptor = GroupDescriptor(tuple(Summand.pruefer() for _ in range(r)), InvolutionSpec(matrix=matrix))
    m_array = np.array(matrix, dtype=object)
    identity = np.array(eye(r).tolist(), dtype=object)
    fixed = saturate_at_two(integer_kernel(m_array - identity))
    negated = saturate_at_two(integer_kernel(m_array + identity))

    dependencies = _gf2_dependencies(_mod2(fixed + negated)) if fixed and negated else []
    intersection = [(_mod2([v for v, e in zip(fixed, eps[:len(fixed)]) if e]).sum(axis=0) % 2).astype(np.uint8)
                    for eps in dependencies]

    def complement(candidates: List[List[int]], start: List[np.ndarray]) -> List[List[int]]:
        span = _GF2Span(r)
        for v in start:
            span.insert(v)
        return [c for c in candidates if span.insert(_mod2([c])[0])]

    w_fixed = complement(fixed, intersection)
    w_neg = complement(negated, intersection)
    standard = [[1 if i == j else 0 for i in range(r)] for j in range(r)]
    v_pairs = complement(standard, [_mod2([v])[0] for v in fixed + negated])
    pairs = [(tuple(v), tuple(int(x) for x in m_array.dot(np.array(v, dtype=object)))) for v in v_pairs]

    decomposition = InpDecomposition(descriptor, [tuple(v) for v in w_fixed], [tuple(v) for v in w_neg], pairs,
                                     depth)
    check = _GF2Span(r)
    for v in decomposition.basis_vectors():
        check.insert(_mod2([v])[0])
    assert check.dimension == r and len(decomposition.basis_vectors()) == r, \
        "the I, N and P towers do not form a basis of Z_2^r"
    logging.info(f"decomposed rank {r}: {len(w_fixed)} fixed, {len(w_neg)} negated, {len(pairs)} swapped pairs")
    return decomposition


def decompose_descriptor(descriptor: GroupDescriptor, depth: int = DEFAULT_TOWER_DEPTH) -> InpDecomposition:
    if not descriptor.is_all_pruefer() or descriptor.action is None:
        raise DescriptorMismatchException(f"'{descriptor}' must be all-Pruefer with an action")
    matrix = descriptor.action.as_matrix(descriptor.rank)
    return inp_decompose(descriptor.rank, [[int(x) for x in row] for row in matrix], depth)


def check_action_laws(decomposition: InpDecomposition, depth: Optional[int] = None) -> bool:
    depth = decomposition.depth if depth is None else depth
    for i in range(depth + 1):
        for tower in decomposition.fixed_towers():
            if apply_action(tower[i]) != tower[i]:
                return False
        for tower in decomposition.neg_towers():
            if apply_action(tower[i]) != -tower[i]:
                return False
        for first, second in decomposition.pair_towers():
            if apply_action(first[i]) != second[i] or apply_action(second[i]) != first[i]:
                return False
    return True


def check_spans_torsion(decomposition: InpDecomposition, k: int, samples: int = 1000, seed: int = 0) -> bool:
    """
    Check that the 2^k-torsion of the I, N and P towers intersect trivially and jointly span the 2^k-torsion
    of (Q_2/Z_2)^r, i.e. that coefficients -> sum(c_b * b / 2^k) is a bijection of (Z/2^k)^r. Small cases
    enumerate every coefficient vector; larger ones solve for random targets.
    """
    r, modulus = decomposition.rank, 2 ** k
    basis = decomposition.basis_matrix()
    if r * k <= EXHAUSTIVE_CHECK_LIMIT:
        grid = np.array(list(itertools.product(range(modulus), repeat=r)), dtype=np.int64)
        images = grid.dot(basis.astype(np.int64).T) % modulus
        return np.unique(images, axis=0).shape[0] == modulus ** r
    try:
        inverse = Matrix(basis.tolist()).inv_mod(modulus)
    except ValueError:
        return False
    rng = random.Random(seed)
    b = Matrix(basis.tolist())
    for _ in range(samples):
        target = Matrix([rng.randrange(modulus) for _ in range(r)])
        coefficients = (inverse * target).applyfunc(lambda x: x % modulus)
        if (b * coefficients).applyfunc(lambda x: x % modulus) != target:
            return False
    return True

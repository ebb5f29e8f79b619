"""Rotation and permutation gadgets.

Permutations are tuples of 1-based images: ``sigma[i - 1]`` is sigma(i). A
link realizes sigma when every coloring copies input wire i to output wire
sigma(i) and every input assignment extends to a coloring.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from ordered_coloring.errors import GraphError
from ordered_coloring.gadgets.links import Link, LinkBuilder, certify, chain_all, identity_link

LOG = logging.getLogger(__name__)

Permutation = Tuple[int, ...]


def check_permutation(sigma: Sequence[int]) -> Permutation:
    """Validate a permutation of 1..len(sigma)."""
    sigma = tuple(int(x) for x in sigma)
    if sorted(sigma) != list(range(1, len(sigma) + 1)):
        raise GraphError(f"{list(sigma)} is not a permutation of 1..{len(sigma)}")
    return sigma


def compose(outer: Sequence[int], inner: Sequence[int]) -> Permutation:
    """outer after inner."""
    return tuple(outer[i - 1] for i in inner)


def inverse(sigma: Sequence[int]) -> Permutation:
    """Inverse permutation."""
    result = [0] * len(sigma)
    for i, image in enumerate(sigma, start=1):
        result[image - 1] = i
    return tuple(result)


@dataclass(frozen=True)
class Rotation:
    """Cyclic shift of positions j..k of [ell]: j -> j+1 -> ... -> k -> j."""

    ell: int
    j: int
    k: int

    def __post_init__(self) -> None:
        if not 1 <= self.j <= self.k <= self.ell:
            raise GraphError(f"rotation <{self.ell};{self.j},{self.k}> needs 1 <= j <= k <= ell")

    @property
    def is_identity(self) -> bool:
        """True when j == k."""
        return self.j == self.k

    def __call__(self, i: int) -> int:
        if self.j <= i < self.k:
            return i + 1
        if i == self.k:
            return self.j
        return i

    def as_permutation(self) -> Permutation:
        """Image tuple."""
        return tuple(self(i) for i in range(1, self.ell + 1))


def rotation_gadget(ell: int, j: int, k: int) -> Link:
    """Five-layer link of 5*ell + 2 vertices realizing the rotation <ell;j,k> with j < k."""
    if not 1 <= j < k <= ell:
        raise GraphError(f"rotation gadget needs 1 <= j < k <= ell, got ({ell}, {j}, {k})")
    b = LinkBuilder()
    sizes = {1: ell, 2: ell + 1, 3: ell, 4: ell + 1, 5: ell}
    special = {(2, k): (1, 4), (2, k + 1): (2, 3), (3, k): (3, 4), (4, j): (1, 4), (4, j + 1): (2, 3)}
    for layer, size in sizes.items():
        for i in range(1, size + 1):
            b.add((layer, i), (layer, i), special.get((layer, i), (1, 2)))

    for i in range(1, k + 1):
        b.connect((1, i), (2, i))
        b.connect((2, i), (3, i))
    for i in range(k, ell + 1):
        b.connect((1, i), (2, i + 1))
    for i in range(k + 1, ell + 2):
        b.connect((2, i), (3, i - 1))
    for i in range(1, ell + 1):
        if i != k:
            b.connect((3, k), (3, i))
    for i in range(1, j):
        b.connect((3, i), (4, i))
    for i in range(j, k):
        b.connect((3, i), (4, i + 2))
    b.connect((3, k), (4, j))
    b.connect((3, k), (4, j + 1))
    for i in range(k + 1, ell + 1):
        b.connect((3, i), (4, i + 1))
    for i in range(1, j + 1):
        b.connect((4, i), (5, i))
    for i in range(j + 1, ell + 2):
        b.connect((4, i), (5, i - 1))

    link = b.build([(1, i) for i in range(1, ell + 1)], [(5, i) for i in range(1, ell + 1)])
    return certify(link)


def decompose_rotations(sigma: Sequence[int]) -> List[Rotation]:
    """ell - 1 rotations whose composition, later after earlier, is sigma."""
    sigma = check_permutation(sigma)
    ell = len(sigma)
    back = inverse(sigma)
    done: Permutation = tuple(range(1, ell + 1))
    rotations = []
    for i in range(1, ell):
        rot = Rotation(ell, i, done[back[i - 1] - 1])
        rotations.append(rot)
        done = compose(rot.as_permutation(), done)
    return rotations


def permutation_gadget(sigma: Sequence[int]) -> Link:
    """Chain of rotation gadgets realizing sigma; identity rotations become plain wires."""
    sigma = check_permutation(sigma)
    ell = len(sigma)
    if ell < 1:
        raise GraphError("permutation gadget needs at least one wire")
    parts = [
        identity_link(ell) if rot.is_identity else rotation_gadget(rot.ell, rot.j, rot.k)
        for rot in decompose_rotations(sigma)
    ]
    if not parts:
        parts = [identity_link(ell)]
    link = chain_all(parts)
    LOG.debug("permutation gadget for %s: %d rotations, %d vertices", sigma, len(parts), link.n)
    return link

"""Tensor products of permutation modules as block matrices.

The tensor product of two permutation modules of the same symmetric group
splits into permutation modules indexed by contingency matrices with the
given margins.  A morphism between such tensor products is a block matrix
of tabloid morphisms; the single-ladder block generators realize the
tensor product of a ladder generator with an identity.

Two indexings are supported.  ``side='right'`` pairs a tabloid pair
(T, T') with the matrix A_ij = |T^i  cap  T'^j| (row sums = left shape);
``side='left'`` uses A_ij = |T^j  cap  T'^i| (row sums = right shape).
The 'left' indexing is the one under which generators acting on the left
tensor factor become column ladders.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .combinatorics import enumerate_contingency, flatten_matrix
from .errors import DomainError
from .exact import LinMap, tensor
from .tabloids import (TabloidMorphism, Tabloid, identity_morphism,
                       lowering_op, perm_module, raising_op, tabloid_label)


def _cells_matrix(t: Tabloid, u: Tabloid, side: str):
    """Contingency matrix of a tabloid pair, plus the flattened pair word."""
    if side == "right":
        m, n = t.ncells, u.ncells
        cell_of = lambda a, b: a * n + b
    else:
        m, n = u.ncells, t.ncells
        cell_of = lambda a, b: b * n + a
    counts = [[0] * n for _ in range(m)]
    word = []
    for k in range(t.d):
        a, b = t.word[k], u.word[k]
        if side == "right":
            counts[a][b] += 1
        else:
            counts[b][a] += 1
        word.append(cell_of(a, b))
    return tuple(tuple(row) for row in counts), tuple(word)


@dataclass
class TensorDecomposition:
    """Ordered block list plus the tensor-basis <-> block-sum bijection."""

    left: tuple
    right: tuple
    side: str
    blocks: list            # contingency matrices, decreasing lex order
    flat_shapes: list       # flattened block shapes
    offsets: list           # starting index of each block in the sum basis
    bijection: list         # tensor index (T major) -> block-sum index
    total_dim: int

    def block_of(self, a) -> int:
        return self.blocks.index(a)


def decompose_tensor(left, right, side: str = "right") -> TensorDecomposition:
    """Decompose M^left (x) M^right into contingency blocks."""
    left, right = tuple(left), tuple(right)
    if sum(left) != sum(right):
        raise DomainError(f"degree mismatch: |{left}| != |{right}|")
    if side not in ("left", "right"):
        raise DomainError(f"side must be 'left' or 'right', not {side!r}")
    row_margin, col_margin = (left, right) if side == "right" else (right, left)
    blocks = enumerate_contingency(row_margin, col_margin)
    flat_shapes = [flatten_matrix(a) for a in blocks]
    offsets = []
    acc = 0
    for shape in flat_shapes:
        offsets.append(acc)
        acc += perm_module(shape).dim
    block_index = {a: i for i, a in enumerate(blocks)}

    mod_l = perm_module(left)
    mod_r = perm_module(right)
    bijection = [0] * (mod_l.dim * mod_r.dim)
    for it, t in enumerate(mod_l.basis):
        for iu, u in enumerate(mod_r.basis):
            a, word = _cells_matrix(t, u, side)
            b = block_index[a]
            flat = flat_shapes[b]
            local = perm_module(flat).index[word]
            bijection[it * mod_r.dim + iu] = offsets[b] + local
    return TensorDecomposition(left, right, side, blocks, flat_shapes,
                               offsets, bijection, acc)


def block_raising(a, i: int, j: int) -> TabloidMorphism:
    """E_ij on the block M^A: one ladder step from cell (i,j+1) to (i,j).

    Zero exactly when A_{i,j+1} = 0 (the target then has a negative entry).
    """
    n = len(a[0])
    if not (1 <= i <= len(a) and 1 <= j <= n - 1):
        raise DomainError(f"block ladder position ({i},{j}) out of range")
    return raising_op(flatten_matrix(a), (i - 1) * n + j, 1)


def block_lowering(a, i: int, j: int) -> TabloidMorphism:
    """F_ij on the block M^A; zero exactly when A_{ij} = 0."""
    n = len(a[0])
    if not (1 <= i <= len(a) and 1 <= j <= n - 1):
        raise DomainError(f"block ladder position ({i},{j}) out of range")
    return lowering_op(flatten_matrix(a), (i - 1) * n + j, 1)


@dataclass
class BlockMorphism:
    """Matrix of tabloid morphisms between two block decompositions."""

    row_blocks: list
    col_blocks: list
    blocks: dict = field(default_factory=dict)   # (row, col) -> TabloidMorphism

    def block(self, r, c):
        return self.blocks.get((r, c))

    def add_block(self, r, c, morphism: TabloidMorphism):
        if morphism.is_zero():
            return
        if (r, c) in self.blocks:
            self.blocks[(r, c)] = self.blocks[(r, c)] + morphism
            if self.blocks[(r, c)].is_zero():
                del self.blocks[(r, c)]
        else:
            self.blocks[(r, c)] = morphism

    def compose(self, other: "BlockMorphism") -> "BlockMorphism":
        """self after other (block matrix product)."""
        if list(self.col_blocks) != list(other.row_blocks):
            raise DomainError("block decompositions do not match")
        out = BlockMorphism(self.row_blocks, other.col_blocks)
        for (r, k), f in self.blocks.items():
            for (kk, c), g in other.blocks.items():
                if kk == k:
                    out.add_block(r, c, f @ g)
        return out

    def scale(self, a) -> "BlockMorphism":
        out = BlockMorphism(self.row_blocks, self.col_blocks)
        for key, m in self.blocks.items():
            out.add_block(*key, m.scale(a))
        return out

    def __eq__(self, other):
        return (isinstance(other, BlockMorphism)
                and self.row_blocks == other.row_blocks
                and self.col_blocks == other.col_blocks
                and self.blocks == other.blocks)


def tensor_generator(side: str, gen: str, j: int, left, right) -> BlockMorphism:
    """The tensor of a single ladder generator with an identity, as blocks.

    side='left'  : (E_j 1_left) (x) 1_right   or (F_j 1_left) (x) 1_right
    side='right' : 1_left (x) (E_j 1_right)   or 1_left (x) (F_j 1_right)
    using the matching block indexing; gen is 'E' or 'F'.
    """
    if gen not in ("E", "F"):
        raise DomainError(f"generator must be 'E' or 'F', not {gen!r}")
    left, right = tuple(left), tuple(right)
    source = decompose_tensor(left, right, side)
    moved = left if side == "left" else right
    if not 1 <= j <= len(moved) - 1:
        raise DomainError(f"ladder index {j} out of range for {moved}")
    alpha_shift = +1 if gen == "E" else -1
    new_moved = list(moved)
    new_moved[j - 1] += alpha_shift
    new_moved[j] -= alpha_shift
    new_moved = tuple(new_moved)
    if side == "left":
        target = decompose_tensor(new_moved, right, side)
    else:
        target = decompose_tensor(left, new_moved, side)

    out = BlockMorphism(target.blocks, source.blocks)
    op = block_raising if gen == "E" else block_lowering
    for c, a in enumerate(source.blocks):
        for i in range(1, len(a) + 1):
            m = op(a, i, j)
            if m.is_zero():
                continue
            ta = _apply_step(a, i, j, alpha_shift)
            r = target.blocks.index(ta)
            out.add_block(r, c, m)
    return out


def _apply_step(a, i, j, shift):
    rows = [list(row) for row in a]
    rows[i - 1][j - 1] += shift
    rows[i - 1][j] -= shift
    return tuple(tuple(r) for r in rows)


def oracle_tensor(f: TabloidMorphism, g: TabloidMorphism,
                  side: str = "right") -> BlockMorphism:
    """Ground truth: the Kronecker product of the underlying matrices,
    conjugated by the source and target basis bijections and cut into
    blocks."""
    if sum(f.source) != sum(g.source) or sum(f.target) != sum(g.target):
        raise DomainError("tensor factors must act in equal degrees")
    source = decompose_tensor(f.source, g.source, side)
    target = decompose_tensor(f.target, g.target, side)
    big = tensor(f.map, g.map)
    out = BlockMorphism(target.blocks, source.blocks)
    entries_by_block: dict[tuple[int, int], dict] = {}
    src_block = _index_to_block(source)
    tgt_block = _index_to_block(target)
    for (r, c), v in big.entries.items():
        rr = target.bijection[r]
        cc = source.bijection[c]
        br, lr = tgt_block[rr]
        bc, lc = src_block[cc]
        entries_by_block.setdefault((br, bc), {})[(lr, lc)] = v
    for (br, bc), entries in entries_by_block.items():
        s_shape = source.flat_shapes[bc]
        t_shape = target.flat_shapes[br]
        lm = LinMap(tabloid_label(s_shape), tabloid_label(t_shape),
                    perm_module(t_shape).dim, perm_module(s_shape).dim, entries)
        out.add_block(br, bc, TabloidMorphism(s_shape, t_shape, lm))
    return out


def _index_to_block(dec: TensorDecomposition):
    """Map global block-sum index -> (block number, local index)."""
    out = [None] * dec.total_dim
    for b, off in enumerate(dec.offsets):
        dim = perm_module(dec.flat_shapes[b]).dim
        for loc in range(dim):
            out[off + loc] = (b, loc)
    return out


def tensor_identity(left, right, side: str = "right") -> BlockMorphism:
    dec = decompose_tensor(left, right, side)
    out = BlockMorphism(dec.blocks, dec.blocks)
    for b, shape in enumerate(dec.flat_shapes):
        out.add_block(b, b, identity_morphism(shape))
    return out

"""Machine checks of the structural statements about twists, flips and the
explicit constructions, at sizes that run on a desktop.

Every check returns a ``VerificationOutcome``.  A refutation carries the
offending tiling and, when a witness directory is given, a replayable file.
"""

from __future__ import annotations

import json
import os
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Callable

from . import fixtures
from .construct import composed, rigid_pattern, solenoid
from .enumerator import enumerate_tilings, placement_table
from .flipgraph import components, frozen_core_count, slab_flip_moves
from .lattice import (
    AXES,
    CANONICAL_PAIRS,
    Color,
    GoodPair,
    Region,
    Symmetry,
    _is_disk,
    enumerate_slab_type_colorings,
    phi,
)
from .tiling import Tiling
from .transform import TwistTable, mixed_twist, pair_twist, triple_twist
from .twist import domino_flip_moves, twist

CONFIRMED = "confirmed"
REFUTED = "refuted"
SKIPPED = "skipped"

DEFAULT_BUDGET = 200_000


@dataclass
class VerificationOutcome:
    statement: str
    scope: list[str]
    status: str
    witness: Tiling | None = None
    witness_path: str | None = None
    detail: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.status != REFUTED

    def to_json(self) -> dict:
        return {
            "statement": self.statement,
            "scope": self.scope,
            "status": self.status,
            "witness": self.witness_path,
            "detail": _jsonable(self.detail),
        }


def _jsonable(v):
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, Fraction):
        return int(v) if v.denominator == 1 else str(v)
    return v


class _Refuted(Exception):
    def __init__(self, witness: Tiling, **detail):
        super().__init__(detail)
        self.witness = witness
        self.detail = detail


class _OverBudget(Exception):
    pass


def _tilings(region: Region, family: str, budget: int):
    table = placement_table(region, family)
    covers = list(table.covers(budget + 1))
    if len(covers) > budget:
        raise _OverBudget(f"{family} tilings of {region!r} exceed {budget}")
    return table, covers


def _box(spec: str) -> Region:
    dims = tuple(int(v) for v in spec.split("x"))
    return Region.box(*dims)


def _centered_box(l: int, m: int, n: int) -> Region:
    return Region.box(l, m, n, (-(l // 2), -(m // 2), -(n // 2)))


# statements


def check_flip_invariance(budget, twist_fn: Callable = twist):
    """Domino flips preserve the twist."""
    scope = ["3x3x2", "2x2x4", "2x3x4"]
    checked = 0
    for spec in scope:
        _, covers = _tilings(_box(spec), "domino", budget)
        for t in enumerate_tilings(_box(spec), "domino"):
            before = twist_fn(t)
            for _, u in domino_flip_moves(t):
                checked += 1
                if twist_fn(u) != before:
                    raise _Refuted(t, region=spec, before=before, after=twist_fn(u))
    return scope, {"flips": checked}


def _sample_disks(k: int, seed: int = 7, size: int = 6) -> list[list[tuple[int, int]]]:
    """Disks made of overlapping 2x2 squares, grown at random in a size x size window."""
    rng = random.Random(seed)
    out = []
    while len(out) < k:
        squares = {(0, 0), (0, 1), (1, 0), (1, 1)}
        for _ in range(rng.randint(2, 5)):
            x, y = rng.choice(sorted(squares))
            x += rng.choice((-1, 0, 1))
            y += rng.choice((-1, 0, 1))
            block = {(x + i, y + j) for i in (0, 1) for j in (0, 1)}
            squares |= {s for s in block if 0 <= s[0] < size and 0 <= s[1] < size}
        if len(squares) % 2 == 0 and _is_disk(squares) and sorted(squares) not in out:
            out.append(sorted(squares))
    return out


L_DISKS = [
    [(x, y) for x in range(4) for y in range(2)] + [(x, y) for x in range(2) for y in range(2, 4)],
    [(x, y) for x in range(4) for y in range(2)] + [(x, y) for x in range(2) for y in range(2, 6)],
]


def check_integrality(budget):
    """Twists of domino tilings of cylinders are integers."""
    regions = {s: _box(s) for s in ("3x3x2", "2x3x4", "2x2x6")}
    for i, d in enumerate(L_DISKS):
        regions[f"L-disk{i}x2"] = Region.cylinder(d, 2)
    values = set()
    for name, region in regions.items():
        table, covers = _tilings(region, "domino", budget)
        tt = TwistTable(table)
        for cover, s in zip(covers, tt.effect_sums(covers)):
            values.add(int(s))
            if s % 4:
                raise _Refuted(table.tiling(cover), region=name, twist=Fraction(int(s), 4))
    return list(regions), {"twists": sorted(v // 4 for v in values)}


def check_coloring_uniqueness(budget):
    """Boxes have a single slab-type coloring up to renaming the colors."""
    scope = ["2x2x2", "3x3x2", "2x3x4", "3x3x3", "4x3x3"]
    for spec in scope:
        region = _box(spec)
        n = 0
        for coloring in enumerate_slab_type_colorings(region):
            n += 1
            rename: dict = {}
            for c, col in coloring.items():
                if rename.setdefault(Color(phi(c)), col) != col:
                    raise _Refuted(Tiling(region, (), "slab"), region=spec, reason="coloring not a renaming")
        if n != 24:
            raise _Refuted(Tiling(region, (), "slab"), region=spec, colorings=n)
    return scope, {"colorings_per_box": 24}


def check_complement(budget):
    """Tw_k = -Tw_kbar for mixed tilings."""
    regions = {s: _box(s) for s in ("2x2x2", "2x2x4", "4x4x2", "2x2x6")}
    regions["odd-cylinder"] = fixtures.region("odd_cylinder_region")
    nonzero = 0
    for name, region in regions.items():
        table, covers = _tilings(region, "mixed", budget)
        k = CANONICAL_PAIRS[2]
        a = TwistTable(table, k).effect_sums(covers)
        b = TwistTable(table, k.complement).effect_sums(covers)
        for cover, x, y in zip(covers, a, b):
            nonzero += x != 0
            if x != -y:
                raise _Refuted(table.tiling(cover), region=name, tw=Fraction(int(x), 4), tw_bar=Fraction(int(y), 4))
    fx = [fixtures.tiling("mixed_4x4x6_twist_plus2"), fixtures.tiling("mixed_6x6x6_twist_2")]
    for t in fx:
        nonzero += 1
        if mixed_twist(t) != -mixed_twist(t, CANONICAL_PAIRS[2].complement):
            raise _Refuted(t, region="fixture")
    return list(regions) + ["fixtures"], {"nonzero_cases": int(nonzero)}


MIXED_SYMMETRIES = {
    "r_x": (Symmetry.reflection(0), 1),
    "r_y": (Symmetry.reflection(1), 1),
    "r_z": (Symmetry.reflection(2), -1),
    "rho": (Symmetry.rotation(2), -1),
}


def check_mixed_symmetries(budget):
    """On centered boxes: reflections in x and y keep Tw_k, reflection in z and
    the quarter turn about z negate it."""
    corpus = []
    for dims in ((2, 2, 2), (4, 4, 2)):
        region = _centered_box(*dims)
        table, covers = _tilings(region, "mixed", budget)
        corpus += [table.tiling(c) for c in covers]
    for name in ("mixed_4x4x6_twist_plus2", "mixed_4x4x6_twist_minus2"):
        t = fixtures.tiling(name)
        corpus.append(t.translated((-2, -2, -3)))
    k = CANONICAL_PAIRS[2]
    for t in corpus:
        base = mixed_twist(t, k)
        for name, (q, sign) in MIXED_SYMMETRIES.items():
            u = t.mapped(q)
            if u.region != t.region:
                raise RuntimeError("symmetry does not preserve the centered box")
            if mixed_twist(u, k) != sign * base:
                raise _Refuted(t, symmetry=name, before=base, after=mixed_twist(u, k))
    return ["2x2x2", "4x4x2", "4x4x6 fixtures"], {"tilings": len(corpus)}


def check_slab_symmetry(budget):
    """Tw_k(t) = sign(q) Tw_q[k](q t) for all 48 signed permutations."""
    corpus = []
    for spec in ("2x2x4", "4x4x2"):
        table, covers = _tilings(_box(spec), "slab", budget)
        corpus += [table.tiling(c) for c in covers]
    corpus += [fixtures.tiling("slab_6x6x6_ttw_002"), fixtures.tiling("rigid_6x6x5")]
    syms = Symmetry.all_signed_permutations()
    pairs = [GoodPair(a, p) for a in AXES for p in (0, 1)]
    for t in corpus:
        for q in syms:
            u = t.mapped(q)
            for k in pairs:
                lhs = pair_twist(t, k)
                rhs = q.sign * pair_twist(u, q.map_pair(k))
                if lhs != rhs:
                    raise _Refuted(t, q=[list(r) for r in q.matrix], pair=str(k), lhs=lhs, rhs=rhs)
    return ["2x2x4", "4x4x2", "6x6x6 fixture", "6x6x5 rigid"], {"tilings": len(corpus), "symmetries": len(syms)}


def check_two_floor(budget):
    """Slab tilings of D x [0,2] are empty or flip-connected."""
    disks = L_DISKS + _sample_disks(5)
    sizes = []
    for d in disks:
        rep = components(Region.cylinder(d, 2), "slab", budget, invariants=False, keep_codes=False)
        if rep.truncated:
            raise _OverBudget("two-floor region over budget")
        sizes.append(rep.total)
        if rep.count > 1:
            from .tiling import canonical_decode

            raise _Refuted(canonical_decode(rep.components[1].representative, rep.region, "slab"), disk=d)
    return [f"disk{i}x2" for i in range(len(disks))], {"tilings": sizes}


def check_four_by_four(budget, heights=(2, 3, 4)):
    """4 x 4 x N slab tilings form one flip component."""
    detail = {}
    for n in heights:
        rep = components(Region.box(4, 4, n), "slab", budget, invariants=False, keep_codes=False)
        if rep.truncated:
            raise _OverBudget(f"4x4x{n} over budget")
        detail[f"4x4x{n}"] = [rep.total, rep.count]
        if rep.count != 1:
            from .tiling import canonical_decode

            raise _Refuted(canonical_decode(rep.components[1].representative, rep.region, "slab"), height=n)
    return list(detail), detail


def check_rigidity(budget):
    """The 2N x 2N x 5l patterns admit no flips and have Tw_z = 2(N-1)(N-2)l."""
    detail = {}
    for n, l in ((3, 1), (4, 1), (5, 1), (3, 2), (4, 2)):
        t = rigid_pattern(n, l)
        moves = slab_flip_moves(t)
        ttw = triple_twist(t)
        detail[f"{2 * n}x{2 * n}x{5 * l}"] = [len(moves), list(ttw)]
        if moves or ttw.z != 2 * (n - 1) * (n - 2) * l:
            raise _Refuted(t, flips=len(moves), ttw=list(ttw))
    return list(detail), detail


def check_solenoid(budget):
    """TTw of the solenoid tiling is (0, 0, 2uv)."""
    cases = [(1, u, v) for u, v in product((-1, 0, 1), repeat=2)] + [(2, 4, -3), (2, -2, 2), (2, 1, 4)]
    for n, u, v in cases:
        t = solenoid(n, (u, v))
        if not t.validate().ok:
            raise _Refuted(t, n=n, u=u, v=v, reason="invalid")
        ttw = triple_twist(t)
        if tuple(ttw) != (0, 0, 2 * u * v):
            raise _Refuted(t, n=n, u=u, v=v, ttw=list(ttw))
    return [f"n={n},u={u},v={v}" for n, u, v in cases], {"cases": len(cases)}


def check_composed(budget):
    """The composed 16n cube realizes any even triple in range."""
    cases = list(product((-2, 0, 2), repeat=3))
    for target in cases:
        t = composed(1, target)
        if not t.validate().ok or tuple(triple_twist(t)) != target:
            raise _Refuted(t, target=list(target), ttw=list(triple_twist(t)))
    return ["n=1, t in {-2,0,2}^3"], {"cases": len(cases)}


def check_frozen_core(budget):
    """Slabs inside R0 = [0,2(k-1)]^2 x [0,5l] of the rigid pattern can be put
    back in only one way.  All three readings of "inside" are checked."""
    detail = {}
    for k, l in ((3, 1), (4, 1), (5, 1), (3, 2)):
        t = rigid_pattern(k, l)
        hi = (2 * k - 2, 2 * k - 2, 5 * l)
        for label, closed in (("open", ()), ("closed-z", (2,)), ("closed", (0, 1, 2))):
            n = frozen_core_count(t, (0, 0, 0), hi, closed)
            detail[f"k={k},l={l},{label}"] = n
            if n != 1:
                raise _Refuted(t, k=k, l=l, reading=label, count=n)
    return list(detail), detail


def check_bound(budget, n: int = 4):
    """|Tw_k| <= N^4/16 over all slab tilings of the N-cube, for every pair."""
    region = Region.box(n, n, n)
    table, covers = _tilings(region, "slab", budget)
    limit = Fraction(n**4, 16)
    worst = {}
    for a in AXES:
        for p in (0, 1):
            k = GoodPair(a, p)
            sums = TwistTable(table, k).effect_sums(covers)
            i = int(abs(sums).argmax())
            worst[str(k)] = Fraction(int(abs(sums[i])), 4)
            if worst[str(k)] > limit:
                raise _Refuted(table.tiling(covers[i]), pair=str(k), twist=Fraction(int(sums[i]), 4))
    return [f"{n}x{n}x{n} slab ({len(covers)} tilings)"], {"max_abs_twist": worst, "limit": limit}


# parity conjecture


@dataclass
class ParityReport:
    region: Region
    tilings: int
    offsets: list  # per axis: 0, 1, "mixed" or "non-integral"
    witnesses: dict = field(default_factory=dict)  # axis -> (tiling, tiling) or tiling
    truncated: bool = False

    @property
    def consistent(self) -> bool:
        return "mixed" not in self.offsets

    def to_json(self) -> dict:
        return {"tilings": self.tilings, "offsets": self.offsets, "truncated": self.truncated}


def parity_scan(region: Region, budget: int = DEFAULT_BUDGET) -> ParityReport:
    """Parity of Tw_k (canonical pairs) over every slab tiling of ``region``.

    An axis reports 0 or 1 when all twists are integers of one parity, "mixed"
    with two witnesses when both parities occur, and "non-integral" with a
    witness when some twist is not an integer.
    """
    table = placement_table(region, "slab")
    covers = list(table.covers(budget + 1))
    truncated = len(covers) > budget
    covers = covers[:budget]
    offsets, witnesses = [], {}
    for a in AXES:
        if not covers:
            offsets.append(None)
            continue
        sums = TwistTable(table, CANONICAL_PAIRS[a]).effect_sums(covers)
        frac = [i for i, s in enumerate(sums) if s % 4]
        if frac:
            offsets.append("non-integral")
            witnesses[a] = table.tiling(covers[frac[0]])
            continue
        par = [int(s // 4) % 2 for s in sums]
        if len(set(par)) == 1:
            offsets.append(par[0])
        else:
            offsets.append("mixed")
            witnesses[a] = (table.tiling(covers[par.index(0)]), table.tiling(covers[par.index(1)]))
    return ParityReport(region, len(covers), offsets, witnesses, truncated)


PARITY_BOXES = ["2x2x2", "2x2x4", "2x2x6", "4x4x2", "4x4x3", "4x4x4", "2x4x4", "4x6x2"]


def check_parity(budget, extra_regions=None):
    """Parity offsets: zero on every box; other regions are reported.

    A nonzero offset on a box refutes the statement and keeps a witness.
    """
    detail = {}
    for spec in PARITY_BOXES:
        rep = parity_scan(_box(spec), budget)
        if rep.truncated:
            detail[spec] = "skipped"
            continue
        detail[spec] = rep.offsets
        for a, off in enumerate(rep.offsets):
            if off == 0:
                continue
            w = rep.witnesses.get(a)
            if isinstance(w, tuple):
                w = w[1]
            if w is None:  # a constant odd offset: any tiling is a witness
                w = next(iter(enumerate_tilings(_box(spec), "slab")))
            raise _Refuted(w, region=spec, axis="xyz"[a], offset=off, offsets=detail)
    regions = {"odd-cylinder": fixtures.region("odd_cylinder_region")}
    regions.update(extra_regions or {})
    for name, region in regions.items():
        rep = parity_scan(region, budget)
        detail[name] = rep.offsets
        if "mixed" in rep.offsets:
            a = rep.offsets.index("mixed")
            raise _Refuted(rep.witnesses[a][1], region=name, axis="xyz"[a], offsets=rep.offsets)
    return list(detail), detail


STATEMENTS: dict[str, Callable] = {
    "flip-invariance": check_flip_invariance,
    "integrality": check_integrality,
    "coloring-uniqueness": check_coloring_uniqueness,
    "complement": check_complement,
    "mixed-symmetry": check_mixed_symmetries,
    "slab-symmetry": check_slab_symmetry,
    "two-floor": check_two_floor,
    "four-by-four": check_four_by_four,
    "rigidity": check_rigidity,
    "solenoid": check_solenoid,
    "composed": check_composed,
    "frozen-core": check_frozen_core,
    "bound": check_bound,
    "parity": check_parity,
}


def verify_statement(statement: str, budget: int = DEFAULT_BUDGET, witness_dir=None, **kwargs) -> VerificationOutcome:
    if statement not in STATEMENTS:
        raise KeyError(f"unknown statement {statement!r}; known: {', '.join(STATEMENTS)}")
    try:
        scope, detail = STATEMENTS[statement](budget, **kwargs)
        return VerificationOutcome(statement, scope, CONFIRMED, detail=detail)
    except _OverBudget as e:
        return VerificationOutcome(statement, [], SKIPPED, detail={"reason": str(e)})
    except _Refuted as e:
        path = None
        if witness_dir is not None:
            os.makedirs(witness_dir, exist_ok=True)
            path = os.path.join(witness_dir, f"{statement}-witness.json")
            e.witness.dump(path)
        return VerificationOutcome(statement, [], REFUTED, e.witness, path, e.detail)


def _run_one(args):
    statement, budget, witness_dir = args
    return verify_statement(statement, budget, witness_dir).to_json()


def verify_all(budget: int = DEFAULT_BUDGET, witness_dir=None, threads: int = 1, statements=None) -> list[dict]:
    """Run statements (all by default); results in statement order."""
    names = list(statements or STATEMENTS)
    jobs = [(s, budget, witness_dir) for s in names]
    if threads > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(threads) as pool:
            return list(pool.map(_run_one, jobs))
    return [_run_one(j) for j in jobs]


def dumps_lines(outcomes) -> str:
    return "".join(json.dumps(o, sort_keys=True) + "\n" for o in outcomes)

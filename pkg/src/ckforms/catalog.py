"""Classification data for real simple Lie algebras and reductive
descriptors, with every invariant either computed from the restricted
root system or cross-checked against it.

Restricted types per family:

    sl(n,R), sl(n,C), su*(2n)        -> A_{n-1}
    su(p,q)   (p <= q)               -> C_p if p = q else BC_p
    so(p,q)   (p <= q)               -> D_p if p = q else B_p
    so(n,C)                          -> D_{n/2} (n even) / B_{(n-1)/2} (n odd)
    so*(2n)                          -> C_{n/2} (n even) / BC_{(n-1)/2} (n odd)
    sp(n,R), sp(n,C)                 -> C_n
    sp(p,q)   (p <= q)               -> C_p if p = q else BC_p
    exceptional real/complex forms   -> per the table below

Rank-one restricted types are normalized to A_1 (B_1 and C_1 name the
same system).  Descriptors are taken at face value: low-rank exceptional
isomorphisms (so(3,1) = sl(2,C), ...) are not canonicalized, since all
invariants coincide on isomorphic algebras.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from . import weyl
from .errors import NotSemisimple, ParseError
from .rootspace import build_root_system


@dataclass(frozen=True)
class SimpleRealForm:
    """One noncompact simple real Lie algebra."""

    name: str
    family: str
    params: tuple[int, ...]
    restricted_type: str
    restricted_rank: int
    dim_g: int
    dim_k: int
    dim_p: int
    rank_maxcompact: int
    is_complex_as_real: bool


@dataclass(frozen=True)
class CompactPart:
    name: str
    dim: int
    rank: int


@dataclass(frozen=True)
class ReductiveDescriptor:
    """Parsed reductive algebra: simple parts plus split/compact center."""

    text: str
    noncompact_parts: tuple[SimpleRealForm, ...]
    compact_parts: tuple[CompactPart, ...]
    split_center_dim: int
    compact_center_dim: int


@dataclass(frozen=True)
class AttributeRecord:
    restricted_type: str
    restricted_rank: int
    real_rank: int
    ahyp: int
    dim_g: int
    dim_k: int
    dim_p: int
    rank_maxcompact: int

    @property
    def restricted_label(self) -> str:
        return f"{self.restricted_type}{self.restricted_rank}"


@dataclass(frozen=True)
class DerivedInvariants:
    rank_R: int
    ahyp: int
    d: int
    rank_maxcompact_sum: int


def _normalize_rank1(rtype: str, rrank: int) -> tuple[str, int]:
    if rrank == 1 and rtype in ("B", "C"):
        return "A", 1
    return rtype, rrank


def _form(name, family, params, rtype, rrank, dim_g, dim_k, rank_k, complex_=False):
    rtype, rrank = _normalize_rank1(rtype, rrank)
    dim_p = dim_g - dim_k
    if dim_p <= 0:
        raise AssertionError(f"{name}: noncompact form must have dim p > 0")
    return SimpleRealForm(
        name=name,
        family=family,
        params=tuple(params),
        restricted_type=rtype,
        restricted_rank=rrank,
        dim_g=dim_g,
        dim_k=dim_k,
        dim_p=dim_p,
        rank_maxcompact=rank_k,
        is_complex_as_real=complex_,
    )


# ---------------------------------------------------------------------------
# classical families

def sl_R(n: int) -> SimpleRealForm:
    if n < 2:
        raise NotSemisimple(f"sl({n},R) is zero-dimensional")
    return _form(f"sl({n},R)", "sl(n,R)", (n,), "A", n - 1,
                 n * n - 1, n * (n - 1) // 2, n // 2)


def sl_C(n: int) -> SimpleRealForm:
    if n < 2:
        raise NotSemisimple(f"sl({n},C) is zero-dimensional")
    return _form(f"sl({n},C)", "sl(n,C)", (n,), "A", n - 1,
                 2 * (n * n - 1), n * n - 1, n - 1, complex_=True)


def su_star(two_n: int) -> SimpleRealForm:
    if two_n % 2 != 0:
        raise ParseError(f"su*({two_n}): the argument must be even")
    n = two_n // 2
    if n < 2:
        raise NotSemisimple(f"su*({two_n}) is the compact su(2); enter su(2)")
    return _form(f"su*({two_n})", "su*(2n)", (two_n,), "A", n - 1,
                 4 * n * n - 1, n * (2 * n + 1), n)


def su_pq(p: int, q: int) -> SimpleRealForm:
    p, q = min(p, q), max(p, q)
    if p < 1:
        raise NotSemisimple(f"su({p},{q}) is the compact su({q}); enter su({q})")
    rtype = "C" if p == q else "BC"
    n = p + q
    return _form(f"su({p},{q})", "su(p,q)", (p, q), rtype, p,
                 n * n - 1, p * p + q * q - 1, n - 1)


def so_pq(p: int, q: int) -> SimpleRealForm:
    p, q = min(p, q), max(p, q)
    if p < 1:
        if q < 3:
            raise NotSemisimple(f"so({p},{q}) is abelian or zero; enter u(1)^1 or drop it")
        raise NotSemisimple(f"so({p},{q}) is the compact so({q}); enter so({q})")
    if (p, q) == (1, 1):
        raise NotSemisimple("so(1,1) is abelian, isomorphic to R^1; enter R^1")
    if (p, q) == (2, 2):
        raise NotSemisimple(
            "so(2,2) is not simple, isomorphic to sl(2,R)+sl(2,R); enter the sum form"
        )
    rtype = "D" if p == q else "B"
    n = p + q
    return _form(f"so({p},{q})", "so(p,q)", (p, q), rtype, p,
                 n * (n - 1) // 2, p * (p - 1) // 2 + q * (q - 1) // 2,
                 p // 2 + q // 2)


def so_C(n: int) -> SimpleRealForm:
    if n <= 2:
        raise NotSemisimple(f"so({n},C) is abelian or zero; enter R^1+u(1)^1 for so(2,C)")
    if n == 4:
        raise NotSemisimple(
            "so(4,C) is not simple, isomorphic to sl(2,C)+sl(2,C); enter the sum form"
        )
    if n % 2 == 0:
        rtype, rrank = "D", n // 2
        if rrank == 2:  # unreachable (n == 4 rejected); keep the guard explicit
            raise NotSemisimple("so(4,C) is not simple")
    else:
        rtype, rrank = "B", (n - 1) // 2
    return _form(f"so({n},C)", "so(n,C)", (n,), rtype, rrank,
                 n * (n - 1), n * (n - 1) // 2, n // 2, complex_=True)


def so_star(two_n: int) -> SimpleRealForm:
    if two_n % 2 != 0:
        raise ParseError(f"so*({two_n}): the argument must be even")
    n = two_n // 2
    if n == 1:
        raise NotSemisimple("so*(2) is abelian, isomorphic to u(1); enter u(1)^1")
    if n == 2:
        raise NotSemisimple(
            "so*(4) is not simple, isomorphic to su(2)+sl(2,R); enter the sum form"
        )
    if n % 2 == 0:
        rtype, rrank = "C", n // 2
    else:
        rtype, rrank = "BC", (n - 1) // 2
    return _form(f"so*({two_n})", "so*(2n)", (two_n,), rtype, rrank,
                 n * (2 * n - 1), n * n, n)


def sp_R(n: int) -> SimpleRealForm:
    if n < 1:
        raise NotSemisimple("sp(0,R) is zero-dimensional")
    return _form(f"sp({n},R)", "sp(n,R)", (n,), "C", n,
                 n * (2 * n + 1), n * n, n)


def sp_C(n: int) -> SimpleRealForm:
    if n < 1:
        raise NotSemisimple("sp(0,C) is zero-dimensional")
    return _form(f"sp({n},C)", "sp(n,C)", (n,), "C", n,
                 2 * n * (2 * n + 1), n * (2 * n + 1), n, complex_=True)


def sp_pq(p: int, q: int) -> SimpleRealForm:
    p, q = min(p, q), max(p, q)
    if p < 1:
        raise NotSemisimple(f"sp({p},{q}) is the compact sp({q}); enter sp({q})")
    rtype = "C" if p == q else "BC"
    n = p + q
    return _form(f"sp({p},{q})", "sp(p,q)", (p, q), rtype, p,
                 n * (2 * n + 1), p * (2 * p + 1) + q * (2 * q + 1), n)


# name: (restricted type, restricted rank, dim_g, dim_k, rank_k, complex)
_EXCEPTIONAL: dict[str, tuple[str, int, int, int, int, bool]] = {
    "g2(2)": ("G", 2, 14, 6, 2, False),
    "f4(4)": ("F", 4, 52, 24, 4, False),
    "f4(-20)": ("BC", 1, 52, 36, 4, False),
    "e6(6)": ("E", 6, 78, 36, 4, False),
    "e6(2)": ("F", 4, 78, 38, 6, False),
    "e6(-14)": ("BC", 2, 78, 46, 6, False),
    "e6(-26)": ("A", 2, 78, 52, 4, False),
    "e7(7)": ("E", 7, 133, 63, 7, False),
    "e7(-5)": ("F", 4, 133, 69, 7, False),
    "e7(-25)": ("C", 3, 133, 79, 7, False),
    "e8(8)": ("E", 8, 248, 120, 8, False),
    "e8(-24)": ("F", 4, 248, 136, 8, False),
    "g2(C)": ("G", 2, 28, 14, 2, True),
    "f4(C)": ("F", 4, 104, 52, 4, True),
    "e6(C)": ("E", 6, 156, 78, 6, True),
    "e7(C)": ("E", 7, 266, 133, 7, True),
    "e8(C)": ("E", 8, 496, 248, 8, True),
}


def exceptional(name: str) -> SimpleRealForm:
    rtype, rrank, dim_g, dim_k, rank_k, cx = _EXCEPTIONAL[name]
    return _form(name, name, (), rtype, rrank, dim_g, dim_k, rank_k, complex_=cx)


# ---------------------------------------------------------------------------
# compact simple algebras (admitted in descriptors, all invariants zero)

def compact_part(name: str, n: int | None = None) -> CompactPart:
    if name == "su":
        if n < 2:
            raise NotSemisimple(f"su({n}) is zero-dimensional")
        return CompactPart(f"su({n})", n * n - 1, n - 1)
    if name == "so":
        if n < 3:
            if n == 2:
                raise NotSemisimple("so(2) is abelian, isomorphic to u(1); enter u(1)^1")
            raise NotSemisimple(f"so({n}) is zero-dimensional")
        if n == 4:
            raise NotSemisimple(
                "so(4) is not simple, isomorphic to su(2)+su(2); enter the sum form"
            )
        return CompactPart(f"so({n})", n * (n - 1) // 2, n // 2)
    if name == "sp":
        if n < 1:
            raise NotSemisimple("sp(0) is zero-dimensional")
        return CompactPart(f"sp({n})", n * (2 * n + 1), n)
    fixed = {"g2": (14, 2), "f4": (52, 4), "e6": (78, 6), "e7": (133, 7), "e8": (248, 8)}
    dim, rank = fixed[name]
    return CompactPart(name, dim, rank)


# ---------------------------------------------------------------------------
# descriptor parsing

_ALIASES = {"e6(I)": "e6(6)", "e6(IV)": "e6(-26)"}

_RE_SPLIT_CENTER = re.compile(r"^R\^(\d+)$")
_RE_COMPACT_CENTER = re.compile(r"^u\(1\)\^(\d+)$")
_RE_SL = re.compile(r"^sl\((\d+),([RC])\)$")
_RE_SU_STAR = re.compile(r"^su\*\((\d+)\)$")
_RE_SU_PQ = re.compile(r"^su\((\d+),(\d+)\)$")
_RE_SO_C = re.compile(r"^so\((\d+),C\)$")
_RE_SO_PQ = re.compile(r"^so\((\d+),(\d+)\)$")
_RE_SO_STAR = re.compile(r"^so\*\((\d+)\)$")
_RE_SP_RC = re.compile(r"^sp\((\d+),([RC])\)$")
_RE_SP_PQ = re.compile(r"^sp\((\d+),(\d+)\)$")
_RE_COMPACT = re.compile(r"^(su|so|sp)\((\d+)\)$")
_COMPACT_FIXED = ("g2", "f4", "e6", "e7", "e8")


def _parse_term(term, noncompact, compact, center):
    term = _ALIASES.get(term, term)
    if (m := _RE_SPLIT_CENTER.match(term)):
        center[0] += int(m.group(1))
        return
    if (m := _RE_COMPACT_CENTER.match(term)):
        center[1] += int(m.group(1))
        return
    if (m := _RE_SL.match(term)):
        n = int(m.group(1))
        noncompact.append(sl_R(n) if m.group(2) == "R" else sl_C(n))
        return
    if (m := _RE_SU_STAR.match(term)):
        noncompact.append(su_star(int(m.group(1))))
        return
    if (m := _RE_SU_PQ.match(term)):
        noncompact.append(su_pq(int(m.group(1)), int(m.group(2))))
        return
    if (m := _RE_SO_C.match(term)):
        noncompact.append(so_C(int(m.group(1))))
        return
    if (m := _RE_SO_PQ.match(term)):
        noncompact.append(so_pq(int(m.group(1)), int(m.group(2))))
        return
    if (m := _RE_SO_STAR.match(term)):
        noncompact.append(so_star(int(m.group(1))))
        return
    if (m := _RE_SP_RC.match(term)):
        n = int(m.group(1))
        noncompact.append(sp_R(n) if m.group(2) == "R" else sp_C(n))
        return
    if (m := _RE_SP_PQ.match(term)):
        noncompact.append(sp_pq(int(m.group(1)), int(m.group(2))))
        return
    if term in _EXCEPTIONAL:
        noncompact.append(exceptional(term))
        return
    if (m := _RE_COMPACT.match(term)):
        compact.append(compact_part(m.group(1), int(m.group(2))))
        return
    if term in _COMPACT_FIXED:
        compact.append(compact_part(term))
        return
    raise ParseError(f"cannot parse descriptor term {term!r}")


def parse_descriptor(text: str) -> ReductiveDescriptor:
    """Parse a reductive-algebra descriptor.

    Grammar: terms joined by '+', each term a simple form ("sl(5,R)",
    "su*(6)", "so(4,7)", "e6(-26)", ...), a compact simple name
    ("so(9)", "f4"), a split center "R^k" or a compact center "u(1)^k".
    Whitespace is ignored; names are case-sensitive.  An empty string is
    the trivial (zero) algebra.
    """
    stripped = re.sub(r"\s+", "", text)
    noncompact: list[SimpleRealForm] = []
    compact: list[CompactPart] = []
    center = [0, 0]
    if stripped:
        for term in stripped.split("+"):
            if not term:
                raise ParseError(f"empty term in descriptor {text!r}")
            _parse_term(term, noncompact, compact, center)
    canon = [p.name for p in noncompact] + [p.name for p in compact]
    if center[0]:
        canon.append(f"R^{center[0]}")
    if center[1]:
        canon.append(f"u(1)^{center[1]}")
    return ReductiveDescriptor(
        text="+".join(canon) if canon else "",
        noncompact_parts=tuple(noncompact),
        compact_parts=tuple(compact),
        split_center_dim=center[0],
        compact_center_dim=center[1],
    )


def parse_simple(text: str) -> SimpleRealForm:
    """Parse a descriptor required to be a single noncompact simple form."""
    desc = parse_descriptor(text)
    if (
        len(desc.noncompact_parts) != 1
        or desc.compact_parts
        or desc.split_center_dim
        or desc.compact_center_dim
    ):
        raise ParseError(f"{text!r} must name a single noncompact simple algebra")
    return desc.noncompact_parts[0]


# ---------------------------------------------------------------------------
# invariants

def restricted_system(form: SimpleRealForm):
    return build_root_system(form.restricted_type, form.restricted_rank)


def ahyp_of(form: SimpleRealForm) -> int:
    return weyl.ahyp_dimension(restricted_system(form))


def attributes(form: SimpleRealForm) -> AttributeRecord:
    """All invariants of a simple form; the a-hyperbolic rank is computed
    from the restricted root system, never transcribed."""
    return AttributeRecord(
        restricted_type=form.restricted_type,
        restricted_rank=form.restricted_rank,
        real_rank=form.restricted_rank,
        ahyp=ahyp_of(form),
        dim_g=form.dim_g,
        dim_k=form.dim_k,
        dim_p=form.dim_p,
        rank_maxcompact=form.rank_maxcompact,
    )


def derived_invariants(desc: ReductiveDescriptor) -> DerivedInvariants:
    """Additive invariants of a reductive descriptor: compact parts and the
    compact center contribute nothing to rank, a-hyperbolic rank or d;
    each split central direction adds one to both rank and d."""
    rank = sum(p.restricted_rank for p in desc.noncompact_parts) + desc.split_center_dim
    ahyp = sum(ahyp_of(p) for p in desc.noncompact_parts)
    d = sum(p.dim_p for p in desc.noncompact_parts) + desc.split_center_dim
    rk = (
        sum(p.rank_maxcompact for p in desc.noncompact_parts)
        + sum(p.rank for p in desc.compact_parts)
        + desc.compact_center_dim
    )
    return DerivedInvariants(rank_R=rank, ahyp=ahyp, d=d, rank_maxcompact_sum=rk)


# ---------------------------------------------------------------------------
# enumeration

FAMILY_ORDER = (
    "sl(n,R)", "sl(n,C)", "su*(2n)", "su(p,q)", "so(p,q)", "so(n,C)",
    "so*(2n)", "sp(n,R)", "sp(n,C)", "sp(p,q)",
    "g2(2)", "f4(4)", "f4(-20)", "e6(6)", "e6(2)", "e6(-14)", "e6(-26)",
    "e7(7)", "e7(-5)", "e7(-25)", "e8(8)", "e8(-24)",
    "g2(C)", "f4(C)", "e6(C)", "e7(C)", "e8(C)",
)

_FAMILY_INDEX = {name: i for i, name in enumerate(FAMILY_ORDER)}


def form_sort_key(form: SimpleRealForm) -> tuple:
    return (_FAMILY_INDEX[form.family], form.params)


def _one_param(builder, start, dim_of, max_dim):
    n = start
    while dim_of(n) <= max_dim:
        yield builder(n)
        n += 1


def _two_param(builder, dim_of, max_dim, skip=()):
    p = 1
    while dim_of(p, p) <= max_dim:
        q = p
        while dim_of(p, q) <= max_dim:
            if (p, q) not in skip:
                yield builder(p, q)
            q += 1
        p += 1


def enumerate_simple_forms(max_dim_g: int) -> list[SimpleRealForm]:
    """All noncompact simple forms with dim_g <= max_dim_g, in canonical
    order (family, then parameters ascending).  Every family dimension
    grows without bound in each parameter, so the scan terminates."""
    out: list[SimpleRealForm] = []
    out.extend(_one_param(sl_R, 2, lambda n: n * n - 1, max_dim_g))
    out.extend(_one_param(sl_C, 2, lambda n: 2 * (n * n - 1), max_dim_g))
    out.extend(_one_param(lambda n: su_star(2 * n), 2, lambda n: 4 * n * n - 1, max_dim_g))
    out.extend(_two_param(su_pq, lambda p, q: (p + q) ** 2 - 1, max_dim_g))
    out.extend(_two_param(so_pq, lambda p, q: (p + q) * (p + q - 1) // 2, max_dim_g,
                          skip=((1, 1), (2, 2))))
    for n in range(3, max_dim_g + 2):
        if n == 4:
            continue
        if n * (n - 1) > max_dim_g:
            break
        out.append(so_C(n))
    out.extend(_one_param(lambda n: so_star(2 * n), 3, lambda n: n * (2 * n - 1), max_dim_g))
    out.extend(_one_param(sp_R, 1, lambda n: n * (2 * n + 1), max_dim_g))
    out.extend(_one_param(sp_C, 1, lambda n: 2 * n * (2 * n + 1), max_dim_g))
    out.extend(_two_param(sp_pq, lambda p, q: (p + q) * (2 * (p + q) + 1), max_dim_g))
    for name in _EXCEPTIONAL:
        form = exceptional(name)
        if form.dim_g <= max_dim_g:
            out.append(form)
    out.sort(key=form_sort_key)
    return out


def scan_real_forms(max_restricted_rank: int, param_bound: int | None = None):
    """Catalog entries with restricted rank at most the bound.

    Two-parameter families are scanned with the larger parameter capped at
    `param_bound` (default: 2 * max_restricted_rank + 2): the restricted
    system, hence the a-hyperbolic rank, depends only on the smaller
    parameter and on whether the parameters are equal, so a larger sweep
    cannot reveal new (ahyp, rank) behavior.
    """
    if param_bound is None:
        param_bound = 2 * max_restricted_rank + 2
    out = []
    for n in range(2, max_restricted_rank + 2):
        out.append(sl_R(n))
        out.append(sl_C(n))
        if n >= 2:
            out.append(su_star(2 * n))
    for p in range(1, max_restricted_rank + 1):
        for q in range(p, param_bound + 1):
            out.append(su_pq(p, q))
            if (p, q) not in ((1, 1), (2, 2)):
                out.append(so_pq(p, q))
            out.append(sp_pq(p, q))
    for n in range(3, 2 * max_restricted_rank + 2):
        if n != 4:
            out.append(so_C(n))
    for n in range(3, 2 * max_restricted_rank + 2):
        out.append(so_star(2 * n))
    for n in range(1, max_restricted_rank + 1):
        out.append(sp_R(n))
        out.append(sp_C(n))
    out.extend(exceptional(name) for name in _EXCEPTIONAL)
    out = [f for f in out if f.restricted_rank <= max_restricted_rank]
    out.sort(key=form_sort_key)
    return out


# ---------------------------------------------------------------------------
# the rank-vs-ahyp table

# family label, minimal k, concrete form for k, (expected ahyp, expected rank)
TABLE1_FAMILIES = (
    ("sl(2k,R)", 2, lambda k: sl_R(2 * k), lambda k: (k, 2 * k - 1)),
    ("sl(2k+1,R)", 1, lambda k: sl_R(2 * k + 1), lambda k: (k, 2 * k)),
    ("su*(4k)", 2, lambda k: su_star(4 * k), lambda k: (k, 2 * k - 1)),
    ("su*(4k+2)", 1, lambda k: su_star(4 * k + 2), lambda k: (k, 2 * k)),
    ("so(2k+1,2k+1)", 2, lambda k: so_pq(2 * k + 1, 2 * k + 1), lambda k: (2 * k, 2 * k + 1)),
)
TABLE1_EXCEPTIONALS = (("e6(6)", (4, 6)), ("e6(-26)", (1, 2)))


@dataclass(frozen=True)
class Table1Row:
    family: str
    k: int | None
    form: SimpleRealForm
    ahyp: int
    real_rank: int
    expected_ahyp: int
    expected_rank: int


def table1_rows(k_max: int) -> list[Table1Row]:
    """Rows of the rank-vs-ahyp table with parameters up to k_max, each
    (ahyp, rank) computed from the restricted root system."""
    rows = []
    for family, k_min, build, expect in TABLE1_FAMILIES:
        for k in range(k_min, k_max + 1):
            form = build(k)
            ea, er = expect(k)
            rows.append(Table1Row(family, k, form, ahyp_of(form),
                                  form.restricted_rank, ea, er))
    for name, (ea, er) in TABLE1_EXCEPTIONALS:
        form = exceptional(name)
        rows.append(Table1Row(name, None, form, ahyp_of(form),
                              form.restricted_rank, ea, er))
    return rows


def in_table1_families(form: SimpleRealForm) -> bool:
    """Whether a form belongs to one of the seven table families.

    so(q,q) with odd q >= 3 counts as the so(2k+1,2k+1) family for every
    k >= 1; the k = 1 member is isomorphic to sl(4,R).
    """
    if form.family == "sl(n,R)":
        return form.params[0] >= 3
    if form.family == "su*(2n)":
        return form.params[0] >= 6
    if form.family == "so(p,q)":
        p, q = form.params
        return p == q and p % 2 == 1 and p >= 3
    return form.name in ("e6(6)", "e6(-26)")


def completeness_mismatches(max_restricted_rank: int = 8) -> list[SimpleRealForm]:
    """Non-complex forms with ahyp != real rank that are NOT table-family
    members (must be empty), scanned up to the given restricted rank."""
    out = []
    for form in scan_real_forms(max_restricted_rank):
        if form.is_complex_as_real:
            continue
        if (ahyp_of(form) != form.restricted_rank) != in_table1_families(form):
            out.append(form)
    return out

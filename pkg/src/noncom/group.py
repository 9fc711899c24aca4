"""Dense-table finite groups and their elementary structural computations.

Elements are integer indices 0..n-1 and the group law is an explicit n x n
multiplication table, so everything downstream (centralizers, Sylow
subgroups, the non-commuting graph) reduces to integer array lookups.
Tables come from three places: raw Cayley tables (fully validated),
breadth-first closure of permutation generators, and the constructors
module.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

import numpy as np

from .errors import (
    GroupError,
    NoIdentity,
    NoInverse,
    NotASubgroup,
    NotAssociative,
    NotLatinSquare,
    OrderCapExceeded,
    ParseError,
    PrimeDoesNotDivideOrder,
)

DEFAULT_CAP = 10_000

# Full O(n^3) associativity scans are only affordable for small raw tables;
# generator-built tables inherit associativity from composition.
ASSOC_CHECK_LIMIT = 512


class GroupTable:
    """A finite group as a dense multiplication table over element indices.

    ``table[i, j]`` is the index of the product ``i * j``.  Instances are
    immutable after construction and safe to share between threads; derived
    data (element orders, the commuting matrix) is cached internally.

    Use :func:`from_cayley_table` for untrusted input; the constructor
    itself trusts its arguments.
    """

    __slots__ = ("order", "table", "identity", "labels", "name", "_inverse", "_cache")

    def __init__(
        self,
        table: np.ndarray,
        identity: int,
        labels: Optional[Sequence[str]] = None,
        name: Optional[str] = None,
    ):
        arr = np.ascontiguousarray(np.asarray(table, dtype=np.int32))
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise GroupError(f"table must be square, got shape {arr.shape}")
        arr.setflags(write=False)
        self.table = arr
        self.order = int(arr.shape[0])
        self.identity = int(identity)
        self.labels = tuple(str(s) for s in labels) if labels is not None else None
        if self.labels is not None and len(self.labels) != self.order:
            raise GroupError("labels length does not match group order")
        self.name = name
        inv = np.argmax(arr == self.identity, axis=1).astype(np.int32)
        inv.setflags(write=False)
        self._inverse = inv
        self._cache: dict = {}

    def mul(self, x: int, y: int) -> int:
        return int(self.table[x, y])

    def inv(self, x: int) -> int:
        return int(self._inverse[x])

    def conj(self, x: int, g: int) -> int:
        """g^-1 * x * g."""
        t = self.table
        return int(t[t[self._inverse[g], x], g])

    def power(self, x: int, k: int) -> int:
        if k < 0:
            return self.power(self.inv(x), -k)
        acc = self.identity
        for _ in range(k):
            acc = int(self.table[acc, x])
        return acc

    def elements(self) -> range:
        return range(self.order)

    def label(self, x: int) -> str:
        if self.labels is not None:
            return self.labels[x]
        return str(x)

    def __repr__(self) -> str:
        tag = self.name or "group"
        return f"<GroupTable {tag} order={self.order}>"


class ElementSet:
    """A subset of one group's element indices, iterated in increasing order.

    Equality and hashing look only at the universe size and the members.
    ``subgroup`` is a bookkeeping flag set by operations whose output is
    guaranteed to be a subgroup; operations that *require* a subgroup
    re-verify closure instead of trusting the flag.
    """

    __slots__ = ("universe_order", "members", "subgroup", "_lookup")

    def __init__(self, universe_order: int, members: Iterable[int], subgroup: bool = False):
        uo = int(universe_order)
        mem = tuple(sorted({int(m) for m in members}))
        if mem and not (0 <= mem[0] and mem[-1] < uo):
            raise GroupError(f"member out of range for universe of order {uo}")
        self.universe_order = uo
        self.members = mem
        self.subgroup = bool(subgroup)
        self._lookup = frozenset(mem)

    @classmethod
    def from_mask(cls, mask: np.ndarray, subgroup: bool = False) -> "ElementSet":
        return cls(len(mask), np.flatnonzero(mask), subgroup=subgroup)

    def mask(self) -> np.ndarray:
        m = np.zeros(self.universe_order, dtype=bool)
        if self.members:
            m[list(self.members)] = True
        return m

    def indices(self) -> np.ndarray:
        return np.asarray(self.members, dtype=np.int64)

    def intersection(self, other: "ElementSet") -> "ElementSet":
        if self.universe_order != other.universe_order:
            raise GroupError("universe mismatch")
        return ElementSet(
            self.universe_order,
            self._lookup & other._lookup,
            subgroup=self.subgroup and other.subgroup,
        )

    def union(self, other: "ElementSet") -> "ElementSet":
        if self.universe_order != other.universe_order:
            raise GroupError("universe mismatch")
        return ElementSet(self.universe_order, self._lookup | other._lookup)

    def __contains__(self, x: int) -> bool:
        return x in self._lookup

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ElementSet):
            return NotImplemented
        return self.universe_order == other.universe_order and self.members == other.members

    def __hash__(self) -> int:
        return hash((self.universe_order, self.members))

    def __repr__(self) -> str:
        shown = ",".join(map(str, self.members[:8]))
        more = "..." if len(self.members) > 8 else ""
        return f"<ElementSet {{{shown}{more}}} of {self.universe_order}>"


@dataclass(frozen=True)
class SubgroupShape:
    is_cyclic: bool
    elementary_abelian_q: Optional[int]


# ---------------------------------------------------------------------------
# validation


def check_group_axioms(arr: np.ndarray) -> int:
    """Validate a raw table against the group axioms and return the identity.

    Checks run in the order Latin square, identity, inverses, associativity,
    each reporting the first violation found.  The associativity scan is
    O(n^3) and therefore limited to ``ASSOC_CHECK_LIMIT``.
    """
    n = arr.shape[0]
    if n > ASSOC_CHECK_LIMIT:
        raise OrderCapExceeded(
            f"raw tables above order {ASSOC_CHECK_LIMIT} are rejected because "
            "associativity cannot be verified exhaustively; build the group "
            "from permutation generators instead"
        )
    ref = np.arange(n, dtype=arr.dtype)
    row_ok = (np.sort(arr, axis=1) == ref).all(axis=1)
    if not row_ok.all():
        i = int(np.argmin(row_ok))
        v = _first_repeat(arr[i])
        raise NotLatinSquare(f"row {i} repeats {v}")
    col_ok = (np.sort(arr, axis=0) == ref[:, None]).all(axis=0)
    if not col_ok.all():
        j = int(np.argmin(col_ok))
        v = _first_repeat(arr[:, j])
        raise NotLatinSquare(f"column {j} repeats {v}")

    ident_rows = np.flatnonzero((arr == ref).all(axis=1))
    identity = -1
    for e in ident_rows:
        if (arr[:, e] == ref).all():
            identity = int(e)
            break
    if identity < 0:
        raise NoIdentity("no element is a two-sided identity")

    right = np.argmax(arr == identity, axis=1)
    two_sided = arr[right, ref] == identity
    if not two_sided.all():
        x = int(np.argmin(two_sided))
        raise NoInverse(f"element {x} has no two-sided inverse")

    for x in range(n):
        lhs = arr[arr[x]]          # lhs[y, z] = (x*y)*z
        rhs = arr[x][arr]          # rhs[y, z] = x*(y*z)
        if not np.array_equal(lhs, rhs):
            y, z = np.argwhere(lhs != rhs)[0]
            raise NotAssociative(
                f"({x}*{y})*{z} = {int(lhs[y, z])} but {x}*({y}*{z}) = {int(rhs[y, z])}"
            )
    return identity


def _first_repeat(row: np.ndarray):
    seen = set()
    for v in row.tolist():
        if v in seen:
            return v
        seen.add(v)
    return None


def from_cayley_table(
    raw,
    labels: Optional[Sequence[str]] = None,
    name: Optional[str] = None,
) -> GroupTable:
    """Build a validated group from a raw n x n table of element indices.

    The identity stays at whatever index the input put it.  Rejects
    non-groups with an error naming the first violation.
    """
    arr = np.asarray(raw)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise GroupError(f"table must be square, got shape {arr.shape}")
    if not np.issubdtype(arr.dtype, np.integer):
        arr = arr.astype(np.int64, casting="unsafe")
    n = arr.shape[0]
    if n == 0:
        raise GroupError("empty table")
    if arr.min() < 0 or arr.max() >= n:
        raise GroupError(f"table entries must lie in 0..{n - 1}")
    arr = arr.astype(np.int32)
    identity = check_group_axioms(arr)
    return GroupTable(arr, identity, labels=labels, name=name)


# ---------------------------------------------------------------------------
# permutation input

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str) -> tuple[int, ...]:
    """Parse one permutation in disjoint-cycle notation, e.g. ``(1 2)(3 4)``.

    Points are positive 1-based integers separated by whitespace; points not
    mentioned are fixed.  Returns the permutation as a 0-based image tuple
    whose length is the largest point mentioned (length 1 for the identity).
    """
    s = text.strip()
    bodies = _CYCLE_RE.findall(s)
    leftover = _CYCLE_RE.sub("", s).strip()
    if leftover:
        raise ParseError(f"unexpected text {leftover!r} in permutation {text!r}")
    cycles = []
    top = 0
    seen: set[int] = set()
    for body in bodies:
        pts = []
        for tok in body.split():
            try:
                v = int(tok)
            except ValueError:
                raise ParseError(f"bad point {tok!r} in permutation {text!r}") from None
            if v <= 0:
                raise ParseError(f"points must be positive, got {v} in {text!r}")
            if v in seen:
                raise ParseError(f"point {v} appears twice in {text!r}")
            seen.add(v)
            pts.append(v)
            top = max(top, v)
        if len(pts) >= 2:
            cycles.append(pts)
    m = max(top, 1)
    images = list(range(m))
    for pts in cycles:
        for a, b in zip(pts, pts[1:] + pts[:1]):
            images[a - 1] = b - 1
    return tuple(images)


def parse_generator_text(text: str) -> list[tuple[int, ...]]:
    """Parse a generator file body: one disjoint-cycle permutation per line."""
    gens = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        try:
            gens.append(parse_cycles(s))
        except ParseError as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
    return gens


def cycle_notation(images: Sequence[int]) -> str:
    """Disjoint-cycle string (1-based) for a 0-based image sequence."""
    m = len(images)
    seen = [False] * m
    parts = []
    for start in range(m):
        if seen[start] or images[start] == start:
            seen[start] = True
            continue
        cyc = [start]
        seen[start] = True
        nxt = images[start]
        while nxt != start:
            cyc.append(nxt)
            seen[nxt] = True
            nxt = images[nxt]
        parts.append("(" + " ".join(str(p + 1) for p in cyc) + ")")
    return "".join(parts) if parts else "()"


def from_permutation_generators(
    gens: Sequence[Sequence[int]],
    cap: int = DEFAULT_CAP,
    name: Optional[str] = None,
) -> GroupTable:
    """Close permutation generators under composition into a GroupTable.

    Generators are 0-based image sequences (shorter ones are padded with
    fixed points).  The product convention is ``(x*y)(k) = x(y(k))``:
    apply the right factor first.  Element 0 is the identity and elements
    are numbered in breadth-first discovery order, so the result is
    deterministic.  Associativity is inherited from composition and not
    re-checked.
    """
    norm: list[tuple[int, ...]] = []
    m = 1
    for g in gens:
        t = tuple(int(v) for v in g)
        if sorted(t) != list(range(len(t))):
            raise GroupError(f"generator {g!r} is not a permutation")
        m = max(m, len(t))
        norm.append(t)
    padded = [g + tuple(range(len(g), m)) for g in norm]

    identity = tuple(range(m))
    elems: list[tuple[int, ...]] = [identity]
    index: dict[tuple[int, ...], int] = {identity: 0}
    i = 0
    while i < len(elems):
        w = elems[i]
        i += 1
        for g in padded:
            prod = tuple(w[g[k]] for k in range(m))
            if prod not in index:
                if len(elems) >= cap:
                    raise OrderCapExceeded(
                        f"generated group exceeds the order cap {cap}"
                    )
                index[prod] = len(elems)
                elems.append(prod)

    n = len(elems)
    earr = np.asarray(elems, dtype=np.int32)
    by_bytes = {earr[k].tobytes(): k for k in range(n)}
    table = np.empty((n, n), dtype=np.int32)
    for j in range(n):
        comp = earr[:, earr[j]]  # comp[i] = images of elems[i] o elems[j]
        comp = np.ascontiguousarray(comp)
        col = [by_bytes[comp[k].tobytes()] for k in range(n)]
        table[:, j] = col
    labels = [cycle_notation(e) for e in elems]
    return GroupTable(table, 0, labels=labels, name=name)


# ---------------------------------------------------------------------------
# Cayley-table text format: line 1 is n, then n rows of n 0-based indices.


def parse_cayley_text(text: str, name: Optional[str] = None) -> GroupTable:
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise ParseError("empty Cayley table file")
    try:
        n = int(lines[0])
    except ValueError:
        raise ParseError(f"first line must be the order, got {lines[0]!r}") from None
    if n <= 0:
        raise ParseError(f"order must be positive, got {n}")
    if len(lines) != n + 1:
        raise ParseError(f"expected {n} table rows, found {len(lines) - 1}")
    rows = []
    for i, ln in enumerate(lines[1:]):
        toks = ln.split()
        if len(toks) != n:
            raise ParseError(f"row {i} has {len(toks)} entries, expected {n}")
        try:
            rows.append([int(t) for t in toks])
        except ValueError:
            raise ParseError(f"row {i} contains a non-integer token") from None
    return from_cayley_table(rows, name=name)


def cayley_text(G: GroupTable) -> str:
    out = [str(G.order)]
    for i in range(G.order):
        out.append(" ".join(str(int(v)) for v in G.table[i]))
    return "\n".join(out) + "\n"


def read_cayley_file(path) -> GroupTable:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_cayley_text(fh.read(), name=str(path))


def read_generator_file(path, cap: int = DEFAULT_CAP) -> GroupTable:
    with open(path, "r", encoding="utf-8") as fh:
        gens = parse_generator_text(fh.read())
    return from_permutation_generators(gens, cap=cap, name=str(path))


# ---------------------------------------------------------------------------
# cached derived data


def commuting_matrix(G: GroupTable) -> np.ndarray:
    """Boolean matrix with entry (x, y) true iff x and y commute."""
    M = G._cache.get("commute")
    if M is None:
        M = np.asarray(G.table == G.table.T)
        M.setflags(write=False)
        G._cache["commute"] = M
    return M


def element_orders(G: GroupTable) -> np.ndarray:
    """Vector of orders of all elements."""
    orders = G._cache.get("orders")
    if orders is None:
        n = G.order
        ref = np.arange(n)
        cur = ref.copy()  # cur[x] = x^k
        orders = np.zeros(n, dtype=np.int64)
        for k in range(1, n + 1):
            hit = (orders == 0) & (cur == G.identity)
            orders[hit] = k
            if orders.all():
                break
            cur = G.table[cur, ref]
        if not orders.all():
            raise GroupError("order computation did not terminate; invalid table")
        orders.setflags(write=False)
        G._cache["orders"] = orders
    return orders


def is_abelian_group(G: GroupTable) -> bool:
    flag = G._cache.get("abelian")
    if flag is None:
        flag = bool(commuting_matrix(G).all())
        G._cache["abelian"] = flag
    return flag


# ---------------------------------------------------------------------------
# elementary operations


def element_order(G: GroupTable, x: int) -> int:
    """Least k >= 1 with x^k equal to the identity."""
    return int(element_orders(G)[int(x)])


def center(G: GroupTable) -> ElementSet:
    """Elements commuting with everything; always a subgroup."""
    Z = G._cache.get("center")
    if Z is None:
        mask = commuting_matrix(G).all(axis=1)
        Z = ElementSet.from_mask(mask, subgroup=True)
        G._cache["center"] = Z
    return Z


def centralizer(G: GroupTable, x: int) -> ElementSet:
    """All elements commuting with x; contains the center and x itself."""
    mask = np.asarray(G.table[int(x)] == G.table[:, int(x)])
    return ElementSet.from_mask(mask, subgroup=True)


def commutator(G: GroupTable, x: int, y: int) -> int:
    """x^-1 y^-1 x y; the identity exactly when x and y commute."""
    t = G.table
    inv = G._inverse
    return int(t[t[inv[x], inv[y]], t[x, y]])


def _closure_mask(G: GroupTable, seed: Iterable[int], stop_if_full: bool = False) -> np.ndarray:
    """Breadth-first product closure of ``seed`` (plus the identity).

    Closure under products suffices in a finite group: inverses appear as
    powers.  ``stop_if_full`` returns early once the closure is all of G,
    which keeps the pair-generation scan cheap.
    """
    n = G.order
    t = G.table
    in_set = np.zeros(n, dtype=bool)
    in_set[G.identity] = True
    frontier = np.unique(np.fromiter((int(s) for s in seed), dtype=np.int64))
    frontier = frontier[~in_set[frontier]]
    count = 1
    while frontier.size:
        in_set[frontier] = True
        count += int(frontier.size)
        if stop_if_full and count == n:
            return in_set
        cur = np.flatnonzero(in_set)
        prods = np.unique(
            np.concatenate(
                [t[np.ix_(cur, frontier)].ravel(), t[np.ix_(frontier, cur)].ravel()]
            )
        )
        frontier = prods[~in_set[prods]]
    return in_set


def subgroup_closure(G: GroupTable, S) -> ElementSet:
    """Smallest subgroup containing S (the empty set closes to the identity)."""
    members = S.members if isinstance(S, ElementSet) else S
    return ElementSet.from_mask(_closure_mask(G, members), subgroup=True)


def pair_generates(G: GroupTable, x: int, y: int) -> bool:
    """True iff {x, y} generates the whole group."""
    mask = _closure_mask(G, (x, y), stop_if_full=True)
    return int(mask.sum()) == G.order


def derived_subgroup(G: GroupTable) -> ElementSet:
    """Closure of the set of all commutators; normal in G."""
    t = G.table
    inv = G._inverse
    comms = np.unique(t[t[np.ix_(inv, inv)], t])
    return ElementSet.from_mask(_closure_mask(G, comms), subgroup=True)


def _conjugates_of(G: GroupTable, members: np.ndarray) -> np.ndarray:
    """All g^-1 s g over every g in G and s in members, deduplicated."""
    t = G.table
    inv = G._inverse
    left = t[np.ix_(inv, members)]           # left[g, j] = g^-1 * s_j
    full = t[left, np.arange(G.order)[:, None]]
    return np.unique(full)


def normal_closure(G: GroupTable, S) -> ElementSet:
    """Smallest normal subgroup containing S: close all conjugates of S."""
    members = np.asarray(sorted(S.members if isinstance(S, ElementSet) else set(S)), dtype=np.int64)
    if members.size == 0:
        return ElementSet(G.order, [G.identity], subgroup=True)
    conj = _conjugates_of(G, members)
    return ElementSet.from_mask(_closure_mask(G, conj), subgroup=True)


def _require_subgroup(G: GroupTable, S: ElementSet) -> np.ndarray:
    """Return S's member indices after verifying S really is a subgroup."""
    if not isinstance(S, ElementSet) or S.universe_order != G.order:
        raise NotASubgroup("set does not live in this group")
    if G.identity not in S:
        raise NotASubgroup("missing identity")
    idx = S.indices()
    mask = S.mask()
    prods = G.table[np.ix_(idx, idx)]
    closed = mask[prods]
    if not closed.all():
        a, b = np.argwhere(~closed)[0]
        raise NotASubgroup(
            f"not closed under product: {int(idx[a])}*{int(idx[b])} escapes the set"
        )
    if not mask[G._inverse[idx]].all():
        raise NotASubgroup("not closed under inverse")
    return idx


def is_abelian(G: GroupTable, S: ElementSet) -> bool:
    """True iff all pairs inside the subgroup S commute."""
    idx = _require_subgroup(G, S)
    M = commuting_matrix(G)
    return bool(M[np.ix_(idx, idx)].all())


def is_normal(G: GroupTable, S: ElementSet) -> bool:
    """True iff g^-1 S g = S for every g."""
    idx = _require_subgroup(G, S)
    mask = S.mask()
    conj = _conjugates_of(G, idx)
    return bool(mask[conj].all()) and conj.size <= len(idx)


def normalizer(G: GroupTable, S: ElementSet) -> ElementSet:
    """All g with g^-1 S g = S, by direct conjugation scan."""
    idx = _require_subgroup(G, S)
    t = G.table
    inv = G._inverse
    left = t[np.ix_(inv, idx)]
    conj = t[left, np.arange(G.order)[:, None]]  # conj[g, j] = g^-1 s_j g
    mask = S.mask()
    keep = mask[conj].all(axis=1)
    return ElementSet.from_mask(keep, subgroup=True)


def set_centralizer(G: GroupTable, S: ElementSet) -> ElementSet:
    """All elements commuting with every member of S."""
    idx = np.asarray(sorted(S.members), dtype=np.int64)
    if idx.size == 0:
        return ElementSet(G.order, range(G.order), subgroup=True)
    M = commuting_matrix(G)
    keep = M[:, idx].all(axis=1)
    return ElementSet.from_mask(keep, subgroup=True)


def setwise_product(G: GroupTable, A: ElementSet, B: ElementSet) -> ElementSet:
    """The set of all products a*b with a in A and b in B."""
    a = A.indices()
    b = B.indices()
    if a.size == 0 or b.size == 0:
        return ElementSet(G.order, [])
    return ElementSet(G.order, np.unique(G.table[np.ix_(a, b)]))


# ---------------------------------------------------------------------------
# Sylow machinery


def factorize(n: int) -> list[tuple[int, int]]:
    """Trial-division factorization as (prime, exponent) pairs."""
    out = []
    d = 2
    while d * d <= n:
        e = 0
        while n % d == 0:
            e += 1
            n //= d
        if e:
            out.append((d, e))
        d += 1
    if n > 1:
        out.append((n, 1))
    return out


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == [(n, 1)]


def _is_p_power(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


def sylow_subgroup(G: GroupTable, p: int) -> ElementSet:
    """One Sylow p-subgroup, grown deterministically through normalizers.

    Start with the cyclic subgroup on the first element of order p, then
    repeatedly adjoin the first p-element of the normalizer that lies
    outside the current subgroup; Sylow theory guarantees one exists until
    the full p-power order is reached.  All scans run in increasing index
    order, so the result is reproducible.
    """
    n = G.order
    if n % p != 0:
        raise PrimeDoesNotDivideOrder(f"{p} does not divide {n}")
    target = 1
    m = n
    while m % p == 0:
        target *= p
        m //= p
    orders = element_orders(G)
    start = -1
    for x in range(n):
        if orders[x] == p:
            start = x
            break
    if start < 0:
        raise GroupError(f"no element of order {p}; invalid table")
    P = subgroup_closure(G, [start])
    while len(P) < target:
        N = normalizer(G, P)
        grown = False
        for g in N:
            if g not in P and _is_p_power(int(orders[g]), p):
                P = subgroup_closure(G, list(P.members) + [g])
                grown = True
                break
        if not grown:
            raise GroupError("normalizer growth stalled; invalid table")
    return P


def sylow_conjugates(G: GroupTable, P: ElementSet) -> list[ElementSet]:
    """All distinct conjugates of P, in first-encounter order over g = 0, 1, ...

    The count m always satisfies m = 1 mod p and m | |G| / |P| when P is a
    Sylow p-subgroup; a violation means the input was not one.
    """
    idx = _require_subgroup(G, P)
    t = G.table
    inv = G._inverse
    seen: dict[bytes, None] = {}
    out: list[ElementSet] = []
    n = G.order
    for g in range(n):
        conj = np.sort(t[t[inv[g], idx], g])
        key = conj.tobytes()
        if key not in seen:
            seen[key] = None
            out.append(ElementSet(n, conj, subgroup=True))
    size = len(idx)
    pfac = factorize(size)
    if len(pfac) == 1:
        p = pfac[0][0]
        m = len(out)
        if m % p != 1 or (n // size) % m != 0:
            raise NotASubgroup(f"{size}-element set is not a Sylow {p}-subgroup")
    return out


def subgroup_shape(G: GroupTable, S: ElementSet) -> SubgroupShape:
    """Report whether S is cyclic and whether it is elementary abelian."""
    idx = _require_subgroup(G, S)
    orders = element_orders(G)[idx]
    size = len(idx)
    cyclic = bool((orders == size).any())
    elem_q: Optional[int] = None
    fac = factorize(size)
    if size > 1 and len(fac) == 1:
        q = fac[0][0]
        nonid = orders[orders > 1]
        M = commuting_matrix(G)
        if (nonid == q).all() and M[np.ix_(idx, idx)].all():
            elem_q = q
    return SubgroupShape(is_cyclic=cyclic, elementary_abelian_q=elem_q)

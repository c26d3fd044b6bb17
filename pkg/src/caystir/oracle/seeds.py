"""
Seed rows: brute-force values at the recursion threshold t = max(s, 2).

Three kinds are extracted, all class functions of the centre g:

  phi-k1     row(r) = Φ(Γ¹_t; r, g),           tail t!
  i-row      row(r) = |B¹_r ∩ Z_r g|,          tail t!/2
  cross-row  row(r) = |Z_r ∩ Z_(r-d) g|,        tail t!/2 (0 on a parity clash)

Z_r is the half of the radius-r transposition ball with the parity of r. Each
row is constant from ``stable_from`` on, which is where the Stirling tail begins.
"""

from dataclasses import dataclass, field

from caystir.exceptions import OracleConsistencyError
from caystir.perms import CycleType
from caystir.perms.notation import parse_cycle_type
from caystir.schemas import SeedKind, SeedRowDocument
from caystir.stirling import StirlingFunction


def seed_threshold(t: CycleType) -> int:
    return max(t.support_size, 2)


def seed_key(g_type: CycleType, kind: SeedKind, offset: int = 0) -> str:
    """Cache key from the degree-free class name, e.g. ``i-row__2^1_3^1``."""
    label = kind.value if not offset else f"{kind.value}{offset:+d}"
    return f"{label}__{g_type.support_key.replace(' ', '_')}"


@dataclass(frozen=True)
class SeedRow:
    """
    Brute-force row of a class at its threshold.

    Attributes:
        g_type (CycleType): Class of the centre, at degree t
        t (int): Threshold max(s, 2)
        kind (SeedKind): Which quantity the row counts
        row (dict[int, int]): Values by radius r
        tail (int): Constant value for every r >= stable_from
        offset (int): Parity offset d of a cross-row
    """

    g_type: CycleType
    t: int
    kind: SeedKind
    row: dict[int, int] = field(hash=False)
    tail: int
    offset: int = 0

    @property
    def stable_from(self) -> int:
        return self.t - 1 + max(self.offset, 0)

    @property
    def key(self) -> str:
        return seed_key(self.g_type, self.kind, self.offset)

    def check(self) -> None:
        """Raise if the row is not monotone or does not settle on its tail."""
        values = [self.row[r] for r in sorted(self.row)]
        if self.kind is SeedKind.PHI_K1 and values != sorted(values):
            msg = f"seed row {self.key} is not weakly increasing: {values}"
            raise OracleConsistencyError(msg)
        unsettled = [r for r, v in self.row.items() if r >= self.stable_from and v != self.tail]
        if unsettled:
            msg = f"seed row {self.key} differs from its tail at r={unsettled}"
            raise OracleConsistencyError(msg)

    def to_stirling(self) -> StirlingFunction:
        """Stirling function whose eval_r(n, r) continues this row for n >= t."""
        stable = self.stable_from
        seed = {self.t - r: self.row[r] for r in range(stable)}
        return StirlingFunction(
            threshold=self.t,
            seed=seed,
            tail=self.tail,
            m_floor=self.t - stable + 1,
        )

    def to_document(self) -> SeedRowDocument:
        return SeedRowDocument(
            g_type=str(self.g_type),
            t=self.t,
            kind=self.kind,
            offset=self.offset,
            row=self.row,
            tail=self.tail,
        )

    @classmethod
    def from_document(cls, document: SeedRowDocument) -> "SeedRow":
        return cls(
            g_type=parse_cycle_type(document.g_type, document.t),
            t=document.t,
            kind=document.kind,
            row=dict(document.row),
            tail=document.tail,
            offset=document.offset,
        )

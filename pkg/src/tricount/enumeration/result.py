from __future__ import annotations

from dataclasses import dataclass, field


class EnumerationError(RuntimeError):
    pass


class LimitExceeded(EnumerationError):
    def __init__(self, limit: int):
        self.limit = limit
        super().__init__(f"more than {limit} triangulations; raise the limit to continue")


class TooLarge(EnumerationError):
    pass


@dataclass
class EnumerationResult:
    count: int
    n: int
    v: int
    b: int
    method: str
    degree_sums_interior: dict[int, int] = field(default_factory=dict)
    degree_sums_boundary: dict[int, int] = field(default_factory=dict)
    canonical_list: list[bytes] | None = None
    elapsed: float = 0.0

    def low_degree_weight(self) -> int:
        """4V3 + 3V4 + 2V5 + V6 + 3B2 + 2B3 + B4 over the aggregated sums."""
        V, B = self.degree_sums_interior, self.degree_sums_boundary
        return (4 * V.get(3, 0) + 3 * V.get(4, 0) + 2 * V.get(5, 0) + V.get(6, 0)
                + 3 * B.get(2, 0) + 2 * B.get(3, 0) + B.get(4, 0))

    def to_json(self, input_sha: str = "") -> dict:
        return {
            "schema_version": 1,
            "input_sha": input_sha,
            "n": self.n,
            "v": self.v,
            "b": self.b,
            "count": str(self.count),
            "V": {str(i): str(c) for i, c in sorted(self.degree_sums_interior.items())},
            "B": {str(j): str(c) for j, c in sorted(self.degree_sums_boundary.items())},
            "method": self.method,
            "elapsed_ms": int(round(self.elapsed * 1000)),
        }

"""Combinatorial domain types shared by every service.

All types are frozen Pydantic models so they hash, compare by value and can
be used as dictionary keys and in sets.
"""

from typing import Sequence

from pydantic import BaseModel, ConfigDict, Field, field_validator


class Partition(BaseModel):
    """Weakly decreasing positive integers, stored without trailing zeros."""

    model_config = ConfigDict(frozen=True)

    parts: tuple[int, ...] = Field(default=(), description="Parts, weakly decreasing")

    @field_validator("parts")
    @classmethod
    def check_parts(cls, parts: tuple[int, ...]) -> tuple[int, ...]:
        if any(p <= 0 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        return parts

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        return cls(parts=tuple(parts))

    @classmethod
    def from_composition(cls, values: Sequence[int]) -> "Partition":
        """Sort a non-negative vector into a partition, dropping zeros."""
        return cls(parts=tuple(sorted((v for v in values if v > 0), reverse=True)))

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def padded(self, n: int) -> tuple[int, ...]:
        """Parts zero-padded to ``n`` entries (``n`` must be at least the length)."""
        if n < self.length:
            raise ValueError(f"cannot pad {self} to {n} parts")
        return self.parts + (0,) * (n - self.length)

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"


# A cycle type of S_d is a partition of d read as cycle lengths.
CycleType = Partition


class Tableau(BaseModel):
    """Semistandard tableau: rows weakly increase, columns strictly increase."""

    model_config = ConfigDict(frozen=True)

    rows: tuple[tuple[int, ...], ...] = Field(
        default=(), description="Entries row by row"
    )

    @field_validator("rows")
    @classmethod
    def check_semistandard(
        cls, rows: tuple[tuple[int, ...], ...]
    ) -> tuple[tuple[int, ...], ...]:
        for i, row in enumerate(rows):
            if not row:
                raise ValueError(f"row {i} is empty")
            if any(v <= 0 for v in row):
                raise ValueError(f"row {i} has non-positive entries")
            if any(row[j] > row[j + 1] for j in range(len(row) - 1)):
                raise ValueError(f"row {i} is not weakly increasing")
            if i > 0:
                above = rows[i - 1]
                if len(row) > len(above):
                    raise ValueError(f"row {i} is longer than row {i - 1}")
                if any(above[j] >= row[j] for j in range(len(row))):
                    raise ValueError(f"column strictness fails in row {i}")
        return rows

    @classmethod
    def from_lists(cls, rows: Sequence[Sequence[int]]) -> "Tableau":
        return cls(rows=tuple(tuple(r) for r in rows))

    @property
    def shape(self) -> Partition:
        return Partition(parts=tuple(len(r) for r in self.rows))

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    @property
    def max_entry(self) -> int:
        return max((r[-1] for r in self.rows), default=0)

    def content(self, length: int | None = None) -> tuple[int, ...]:
        """Multiplicity of each value 1..length (defaults to the largest entry)."""
        length = self.max_entry if length is None else length
        counts = [0] * length
        for row in self.rows:
            for v in row:
                counts[v - 1] += 1
        return tuple(counts)


class CompositionMatrix(BaseModel):
    """n x m matrix of non-negative integers; labels GL_d-orbits on flag pairs."""

    model_config = ConfigDict(frozen=True)

    entries: tuple[tuple[int, ...], ...] = Field(..., description="Row-major entries")

    @field_validator("entries")
    @classmethod
    def check_entries(
        cls, entries: tuple[tuple[int, ...], ...]
    ) -> tuple[tuple[int, ...], ...]:
        if not entries or not entries[0]:
            raise ValueError("a composition matrix needs at least one row and column")
        width = len(entries[0])
        for row in entries:
            if len(row) != width:
                raise ValueError("matrix is not rectangular")
            if any(v < 0 for v in row):
                raise ValueError("entries must be non-negative")
        return entries

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "CompositionMatrix":
        return cls(entries=tuple(tuple(r) for r in rows))

    @classmethod
    def zeros(cls, n: int, m: int) -> "CompositionMatrix":
        return cls(entries=tuple((0,) * m for _ in range(n)))

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    @property
    def total(self) -> int:
        return sum(sum(r) for r in self.entries)

    @property
    def row_sums(self) -> tuple[int, ...]:
        return tuple(sum(r) for r in self.entries)

    @property
    def col_sums(self) -> tuple[int, ...]:
        return tuple(sum(col) for col in zip(*self.entries))

    def transpose(self) -> "CompositionMatrix":
        return CompositionMatrix(entries=tuple(zip(*self.entries)))

    def shifted(
        self, plus: tuple[int, int], minus: tuple[int, int]
    ) -> "CompositionMatrix":
        """A + E_plus - E_minus (caller guarantees the minus entry is positive)."""
        rows = [list(r) for r in self.entries]
        rows[plus[0]][plus[1]] += 1
        rows[minus[0]][minus[1]] -= 1
        return CompositionMatrix.from_rows(rows)

    def to_lists(self) -> list[list[int]]:
        return [list(r) for r in self.entries]


class Permutation(BaseModel):
    """Permutation of {1..d} in one-line notation."""

    model_config = ConfigDict(frozen=True)

    word: tuple[int, ...] = Field(..., description="One-line notation w(1), ..., w(d)")

    @field_validator("word")
    @classmethod
    def check_bijective(cls, word: tuple[int, ...]) -> tuple[int, ...]:
        if sorted(word) != list(range(1, len(word) + 1)):
            raise ValueError(f"not a permutation of 1..{len(word)}: {word}")
        return word

    @classmethod
    def of(cls, *word: int) -> "Permutation":
        return cls(word=tuple(word))

    @classmethod
    def identity(cls, d: int) -> "Permutation":
        return cls(word=tuple(range(1, d + 1)))

    @property
    def size(self) -> int:
        return len(self.word)

    def inverse(self) -> "Permutation":
        inv = [0] * self.size
        for i, w in enumerate(self.word, start=1):
            inv[w - 1] = i
        return Permutation(word=tuple(inv))

    def cycle_type(self) -> Partition:
        seen = [False] * self.size
        lengths = []
        for start in range(self.size):
            if seen[start]:
                continue
            length, j = 0, start
            while not seen[j]:
                seen[j] = True
                j = self.word[j] - 1
                length += 1
            lengths.append(length)
        return Partition.from_composition(lengths)


class FlagType(BaseModel):
    """Step dimensions d_1, ..., d_n >= 0 of an n-step flag."""

    model_config = ConfigDict(frozen=True)

    steps: tuple[int, ...] = Field(..., description="Step dimensions")

    @field_validator("steps")
    @classmethod
    def check_steps(cls, steps: tuple[int, ...]) -> tuple[int, ...]:
        if not steps:
            raise ValueError("a flag type needs at least one step")
        if any(s < 0 for s in steps):
            raise ValueError(f"step dimensions must be non-negative: {steps}")
        return steps

    @classmethod
    def of(cls, *steps: int) -> "FlagType":
        return cls(steps=tuple(steps))

    @property
    def n(self) -> int:
        return len(self.steps)

    @property
    def size(self) -> int:
        return sum(self.steps)

    def partial_sums(self) -> tuple[int, ...]:
        sums, acc = [0], 0
        for s in self.steps:
            acc += s
            sums.append(acc)
        return tuple(sums)

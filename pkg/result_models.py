"""
Result models for tracecode reports
Pydantic schemas for quantum code parameters, run configuration and report rows.
"""

from typing import Any, Dict, List, Literal, Optional

import sympy
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


def is_prime_power(q: int) -> bool:
    return q >= 2 and len(sympy.factorint(q)) == 1


class DerivationStep(BaseModel):
    """One rule application in the history of a parameter set"""
    rule: str
    detail: Dict[str, Any] = Field(default_factory=dict)


class QuantumParams(BaseModel):
    """Stabilizer code parameters [[n, k, >=d]]_q"""
    model_config = ConfigDict(frozen=True)

    n: int
    k: int
    d: int
    d_kind: Literal['exact', 'lower'] = 'lower'
    q: int
    derivation: List[DerivationStep] = Field(default_factory=list)

    @model_validator(mode='after')
    def check_ranges(self) -> 'QuantumParams':
        if not 0 <= self.k <= self.n:
            raise ValueError(f"dimension {self.k} outside 0..{self.n}")
        if self.d < 1:
            raise ValueError(f"distance {self.d} must be positive")
        if not is_prime_power(self.q):
            raise ValueError(f"alphabet {self.q} is not a prime power")
        return self

    def label(self) -> str:
        relation = '' if self.d_kind == 'exact' else '≥'
        return f"[[{self.n},{self.k},{relation}{self.d}]]_{self.q}"

    def triple(self) -> tuple:
        return (self.n, self.k, self.d, self.q)

    def extended(self, rule: str, **changes) -> 'QuantumParams':
        detail = {key: value for key, value in changes.items()}
        data = self.model_dump()
        data.update(changes)
        data['derivation'] = [*self.derivation, DerivationStep(rule=rule, detail=detail)]
        return QuantumParams(**data)


class RunConfig(BaseModel):
    """Validated command-line configuration"""
    command: str
    q: List[int] = Field(default_factory=list)
    n: List[int] = Field(default_factory=list)
    t: List[int] = Field(default_factory=list)
    b: List[int] = Field(default_factory=list)
    n_prime: Optional[int] = None
    tau: List[int] = Field(default_factory=list)
    r: Optional[int] = None
    k: Optional[int] = None
    d: Optional[int] = None
    construction: Literal['delta', 'gamma'] = 'delta'
    format: Literal['json', 'csv', 'text'] = 'json'
    out: Optional[str] = None
    export: Optional[str] = None
    jobs: int = 1
    heavy: bool = False
    budget: int = 2_000_000
    trials: int = 2000
    enumeration_cap: int = 2 ** 24
    seed: int = 20240601
    all_primitive: bool = False
    golden: bool = False
    quiet: bool = False

    @field_validator('budget', 'trials', 'enumeration_cap', 'jobs')
    @classmethod
    def positive(cls, value: int) -> int:
        if value < 1:
            raise ValueError('must be positive')
        return value

    def filters(self) -> Dict[str, List[int]]:
        return {key: getattr(self, key) for key in ('q', 'n', 't', 'b') if getattr(self, key)}


class ReportRow(BaseModel):
    """One row of a command report"""
    key: str
    status: Literal['match', 'mismatch', 'error', 'skipped', 'info'] = 'match'
    values: Dict[str, Any] = Field(default_factory=dict)
    expected: Dict[str, Any] = Field(default_factory=dict)
    params: List[QuantumParams] = Field(default_factory=list)
    notes: List[str] = Field(default_factory=list)


class Report(BaseModel):
    """Top-level report document"""
    schema_version: int = Field(default=1, serialization_alias='schema')
    command: str
    config: Dict[str, Any] = Field(default_factory=dict)
    rows: List[ReportRow] = Field(default_factory=list)

    def summary(self) -> Dict[str, int]:
        counts: Dict[str, int] = {}
        for row in self.rows:
            counts[row.status] = counts.get(row.status, 0) + 1
        return counts

    @property
    def failed(self) -> bool:
        return any(row.status in ('mismatch', 'error') for row in self.rows)

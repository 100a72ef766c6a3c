"""Pydantic models of documents read and written by bellkit."""
import json
from typing import Dict, List, Optional

from pydantic import BaseModel, ConfigDict


class SequenceFile(BaseModel):
    """Input sequence file: driver values g(1..N) or coefficients a(0..N)."""

    model_config = ConfigDict(extra="forbid")

    name: str
    values: List[str]


class OutputRecord(BaseModel):
    """Serialized result of a sequence-producing command."""

    command: str
    driver: Optional[str] = None
    params: Dict[str, str] = {}
    path: Optional[str] = None
    limit: int
    start: int
    values: List[str]


class PolynomialRecord(BaseModel):
    """Serialized polynomial of a family (coefficients indexed by degree)."""

    family: str
    n: int
    params: Dict[str, str] = {}
    coeffs: List[str]


class DriverInfo(BaseModel):
    """Registered driver and the names of its parameters."""

    name: str
    display_name: str
    params: List[str] = []


def dump_json(payload):
    """Render model (or list of models) as deterministic JSON text."""
    if isinstance(payload, list):
        data = [p.model_dump(exclude_none=True) for p in payload]
    else:
        data = payload.model_dump(exclude_none=True)
    return json.dumps(data, indent=2) + "\n"

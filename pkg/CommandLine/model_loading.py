import csv
import logging
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from Common.config import PSD_RTOL
from Common.errors import InputError, ParseError
from Distributions import KDPP, ExplicitTable, HomogeneousDistribution, WeightedGraph
from Distributions.subset import Subset, make_subset

logger = logging.getLogger(__name__)

MODEL_KINDS = ('kdpp', 'table', 'spanning-tree')


@dataclass(frozen=True)
class ModelSpec:
    """ kind: one of MODEL_KINDS. path: the input file. For kdpp, features marks path as an n x m
    feature matrix X (L = X X^T) instead of the ensemble L itself; k is required for kdpp only """
    kind: str
    path: Path
    k: Optional[int] = None
    features: bool = False


def _rows(path: Path):
    """ (line number, stripped fields) of every non-blank line """
    try:
        f = open(path, newline='')
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from None
    with f:
        reader = csv.reader(f)
        try:
            for row in reader:
                fields = [value.strip() for value in row]
                if any(fields):
                    yield reader.line_num, fields
        except (csv.Error, UnicodeDecodeError) as e:
            raise ParseError(path, reader.line_num + 1, f"unreadable line ({e})") from None


def _float(path: Path, line_number: int, text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise ParseError(path, line_number, f"{text!r} is not a number") from None
    if not math.isfinite(value):
        raise ParseError(path, line_number, f"{text!r} is not finite")
    return value


def _int(path: Path, line_number: int, text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise ParseError(path, line_number, f"{text!r} is not an integer index") from None


def read_matrix_csv(path: Path, square: bool = True) -> List[List[float]]:
    """ One matrix row per line, comma-separated reals """
    rows, width = [], None
    for line_number, fields in _rows(path):
        row = [_float(path, line_number, value) for value in fields]
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise ParseError(path, line_number, f"row has {len(row)} entries, expected {width}")
        rows.append(row)
    if not rows:
        raise ParseError(path, 1, "file has no rows")
    if square and len(rows) != width:
        raise ParseError(path, len(rows), f"matrix is {len(rows)}x{width}, expected square")
    return rows


def read_table_csv(path: Path) -> Tuple[int, int, Dict[Subset, float]]:
    """ 'i1;i2;...;ik,weight' per line, 0-based. Returns (n, k, entries) with n one past the largest index """
    entries, k = {}, None
    for line_number, fields in _rows(path):
        if len(fields) != 2:
            raise ParseError(path, line_number, "expected 'i1;i2;...;ik,weight'")
        members = [_int(path, line_number, value) for value in fields[0].split(';') if value.strip()]
        try:
            subset = make_subset(members)
        except InputError as e:
            raise ParseError(path, line_number, str(e)) from None
        if subset and subset[0] < 0:
            raise ParseError(path, line_number, "indices must be non-negative")
        if k is None:
            k = len(subset)
        elif len(subset) != k:
            raise ParseError(path, line_number, f"subset has {len(subset)} elements, earlier lines have {k}")
        if subset in entries:
            raise ParseError(path, line_number, f"subset {list(subset)} is listed twice")
        weight = _float(path, line_number, fields[1])
        if not weight > 0:
            raise ParseError(path, line_number, f"weight {weight} is not positive")
        entries[subset] = weight
    if not entries:
        raise ParseError(path, 1, "file has no entries")
    n = 1 + max((s[-1] for s in entries if s), default=-1)
    return n, k, entries


def read_graph_csv(path: Path) -> Tuple[int, List[Tuple[int, int, float]]]:
    """ 'u,v,weight' per line, 0-based vertices. Edge i is line i (blank lines skipped) """
    edges = []
    for line_number, fields in _rows(path):
        if len(fields) != 3:
            raise ParseError(path, line_number, "expected 'u,v,weight'")
        u, w = _int(path, line_number, fields[0]), _int(path, line_number, fields[1])
        if u < 0 or w < 0:
            raise ParseError(path, line_number, "vertices must be non-negative")
        edges.append((u, w, _float(path, line_number, fields[2])))
    if not edges:
        raise ParseError(path, 1, "file has no edges")
    vertex_count = 1 + max(max(u, w) for u, w, _ in edges)
    return vertex_count, edges


def load_model(spec: ModelSpec, psd_rtol: float = PSD_RTOL) -> HomogeneousDistribution:
    path = Path(spec.path)
    if spec.kind == 'kdpp':
        if spec.k is None:
            raise InputError("--k is required for --model kdpp")
        matrix = read_matrix_csv(path, square=not spec.features)
        if spec.features:
            d = KDPP.from_features(matrix, spec.k, psd_rtol)
        else:
            d = KDPP(matrix, spec.k, psd_rtol)
    elif spec.kind == 'table':
        n, k, entries = read_table_csv(path)
        d = ExplicitTable(n, k, entries)
    elif spec.kind == 'spanning-tree':
        vertex_count, edges = read_graph_csv(path)
        d = WeightedGraph(vertex_count, edges)
    else:
        raise InputError(f"unknown model kind {spec.kind!r}, expected one of {', '.join(MODEL_KINDS)}")
    if spec.k is not None and spec.k != d.k:
        raise InputError(f"--k {spec.k} does not match the model, whose sets have {d.k} elements")
    logger.info("Loaded %r from %s", d, path)
    return d


def parse_start(text: Optional[str], d: HomogeneousDistribution) -> Optional[Subset]:
    """ '--start 0,3,5' -> (0, 3, 5), validated against d """
    if text is None:
        return None
    try:
        subset = make_subset((int(value) for value in text.split(',') if value.strip()), d.n)
    except ValueError as e:
        raise InputError(f"--start {text!r}: {e}") from None
    d.validate_subset(subset)
    return subset

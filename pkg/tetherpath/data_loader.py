"""
Data Loader Module
Handles reading and writing of instance and solution files.

Numbers are stored as strings (``"3"``, ``"1.5"`` or ``"7/3"``) so that every
value survives a round trip exactly.
"""

import hashlib
import json
from pathlib import Path
from typing import Any, Dict, Optional, Tuple, Union

from .errors import InstanceFormatError
from .exact import format_exact, to_fraction
from .minlink import BetaPath
from .model import Instance, TurnPoint, effective_budget

PathLike = Union[str, Path]


def digest_bytes(data: bytes) -> str:
    """Content hash used to tie a solution to its instance file."""
    return 'sha256:' + hashlib.sha256(data).hexdigest()


def read_json(path: PathLike) -> Tuple[Dict[str, Any], str]:
    """
    Read a JSON document.

    Returns:
        (parsed document, digest of the raw bytes)
    """
    try:
        data = Path(path).read_bytes()
    except OSError as e:
        raise InstanceFormatError(f"Cannot read {path}: {e.strerror}")
    try:
        document = json.loads(data.decode('utf-8'))
    except (UnicodeDecodeError, json.JSONDecodeError) as e:
        raise InstanceFormatError(f"{path} is not valid JSON: {e}")
    if not isinstance(document, dict):
        raise InstanceFormatError(f"{path} must hold a JSON object")
    return document, digest_bytes(data)


def dumps(document: Dict[str, Any]) -> str:
    """Canonical compact JSON text with a trailing newline."""
    return json.dumps(document, separators=(',', ':')) + '\n'


def write_json(path: PathLike, document: Dict[str, Any]) -> str:
    """Write a document canonically and return the digest of the bytes written."""
    data = dumps(document).encode('utf-8')
    Path(path).write_bytes(data)
    return digest_bytes(data)


def _field(document: Dict[str, Any], key: str):
    if key not in document:
        raise InstanceFormatError(f"Missing field: {key}")
    return document[key]


def _pair(value) -> Tuple:
    if not isinstance(value, (list, tuple)) or len(value) != 2:
        raise InstanceFormatError(f"Expected a [t, y] pair, got {value!r}")
    return to_fraction(value[0]), to_fraction(value[1])


def parse_instance(document: Dict[str, Any]) -> Instance:
    """
    Build an Instance from its JSON form.

    The vertical budget is read from ``vertical_budget`` or, when absent,
    derived from ``tether_length`` and ``line_separation``.
    """
    alpha = to_fraction(_field(document, 'alpha'))
    raw_turns = _field(document, 'turns')
    if not isinstance(raw_turns, list):
        raise InstanceFormatError("turns must be a list of [t, h] pairs")
    turns = tuple(TurnPoint(*_pair(p)) for p in raw_turns)

    tether = document.get('tether_length')
    separation = document.get('line_separation')
    tether = to_fraction(tether) if tether is not None else None
    separation = to_fraction(separation) if separation is not None else None
    if 'vertical_budget' in document:
        budget = to_fraction(document['vertical_budget'])
    elif tether is not None:
        budget = effective_budget(tether, separation if separation is not None else 0)
    else:
        raise InstanceFormatError("Need vertical_budget or tether_length")
    return Instance(alpha, budget, turns, tether, separation)


def instance_to_dict(instance: Instance) -> Dict[str, Any]:
    """JSON form of an instance (the inverse of parse_instance)."""
    document: Dict[str, Any] = {'alpha': format_exact(instance.alpha)}
    if instance.tether_length is not None:
        document['tether_length'] = format_exact(instance.tether_length)
        if instance.line_separation is not None:
            document['line_separation'] = format_exact(instance.line_separation)
    else:
        document['vertical_budget'] = format_exact(instance.vertical_budget)
    document['turns'] = [[format_exact(p.t), format_exact(p.h)] for p in instance.turns]
    return document


def load_instance(path: PathLike) -> Tuple[Instance, str]:
    """
    Load an instance file.

    Returns:
        (instance, digest of the file)
    """
    document, digest = read_json(path)
    return parse_instance(document), digest


def path_to_dict(path: BetaPath) -> Dict[str, Any]:
    def point(p):
        return [format_exact(p[0]), format_exact(p[1])]
    return {
        'start': point(path.start),
        'turns': [point(p) for p in path.turns],
        'end': point(path.end),
    }


def parse_path(document: Dict[str, Any], beta) -> BetaPath:
    """Read the start/turns/end block of a solution document."""
    turns = _field(document, 'turns')
    if not isinstance(turns, list):
        raise InstanceFormatError("path turns must be a list")
    return BetaPath(to_fraction(beta), _pair(_field(document, 'start')),
                    tuple(_pair(p) for p in turns), _pair(_field(document, 'end')))


class DataLoader:
    """Handles loading and writing of instance and solution files."""

    def __init__(self, base_dir: Optional[PathLike] = None):
        """Initialize the Data Loader; relative paths resolve against base_dir."""
        self.base_dir = Path(base_dir) if base_dir is not None else Path.cwd()

    def resolve(self, path: PathLike) -> Path:
        path = Path(path)
        return path if path.is_absolute() else self.base_dir / path

    def load_instance(self, path: PathLike) -> Tuple[Instance, str]:
        """Load an instance file; returns the instance and the file digest."""
        return load_instance(self.resolve(path))

    def load_document(self, path: PathLike) -> Dict[str, Any]:
        return read_json(self.resolve(path))[0]

    def load_solution(self, path: PathLike) -> Tuple[Dict[str, Any], BetaPath]:
        """Load a solution document and the path it records."""
        document = self.load_document(path)
        return document, parse_path(_field(document, 'path'), _field(document, 'beta_star'))

    def write_instance(self, path: PathLike, instance: Instance) -> str:
        """Write an instance canonically; returns the digest a solution must record."""
        return write_json(self.resolve(path), instance_to_dict(instance))

    def write_solution(self, path: PathLike, document: Dict[str, Any]) -> str:
        return write_json(self.resolve(path), document)

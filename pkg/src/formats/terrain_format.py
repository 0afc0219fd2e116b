"""
Terrain file reading and writing.

Two input formats are accepted: a text file whose first line is the vertex
count n followed by n lines "x y", and a JSON document
{"vertices": [[x, y], ...]}.
"""

from pathlib import Path
from typing import IO, List, Tuple, Union
import json
import logging

from pydantic import ValidationError

from ..geometry.terrain import Terrain, build_terrain
from ..schemas.geometry_schemas import TerrainDocument
from ..utils.error_handler import TerrainIOError, TerrainParseError

logger = logging.getLogger(__name__)

Source = Union[str, Path, IO[str]]


def _read(source: Source) -> Tuple[str, str]:
    if hasattr(source, "read"):
        return source.read(), getattr(source, "name", "<stream>")
    path = Path(source)
    try:
        return path.read_text(encoding="utf-8"), str(path)
    except OSError as e:
        raise TerrainIOError(
            message=f"Cannot read terrain file {path}",
            path=str(path),
            original_error=str(e)
        ) from e


def _parse_json(text: str) -> List[Tuple[float, float]]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise TerrainParseError(message=f"Invalid JSON: {e.msg}", line=e.lineno, column=e.colno) from e
    try:
        return TerrainDocument.model_validate(data).vertices
    except ValidationError as e:
        first = e.errors()[0]
        where = ".".join(str(part) for part in first["loc"])
        raise TerrainParseError(message=f"Invalid terrain document at {where}: {first['msg']}") from e


def _parse_text(text: str) -> List[Tuple[float, float]]:
    rows = [(no, line) for no, line in enumerate(text.splitlines(), start=1) if line.strip()]
    if not rows:
        raise TerrainParseError(message="Empty terrain file", line=1, column=1)

    header_no, header = rows[0]
    try:
        count = int(header.strip())
    except ValueError:
        raise TerrainParseError(
            message=f"Expected vertex count, got {header.strip()!r}",
            line=header_no,
            column=len(header) - len(header.lstrip()) + 1
        )

    body = rows[1:]
    if len(body) != count:
        last_no = body[-1][0] if body else header_no
        raise TerrainParseError(
            message=f"Expected {count} vertices, found {len(body)}",
            line=last_no + 1 if len(body) < count else body[count][0],
            column=1
        )

    vertices: List[Tuple[float, float]] = []
    for no, line in body:
        tokens = line.split()
        if len(tokens) != 2:
            raise TerrainParseError(
                message=f"Expected 'x y', got {len(tokens)} fields",
                line=no,
                column=len(line) - len(line.lstrip()) + 1
            )
        coords = []
        for token in tokens:
            try:
                coords.append(float(token))
            except ValueError:
                raise TerrainParseError(
                    message=f"Not a number: {token!r}",
                    line=no,
                    column=line.index(token) + 1
                )
        vertices.append((coords[0], coords[1]))
    return vertices


def parse_terrain(source: Source) -> Terrain:
    """
    Read and validate a terrain.

    Args:
        source: Path or open text stream

    Returns:
        Terrain built by ``build_terrain``

    Raises:
        TerrainIOError: file cannot be read
        TerrainParseError: malformed content (with line/column when known)
        TerrainValidationError: content violates a terrain invariant
    """
    text, name = _read(source)
    if text.lstrip().startswith("{"):
        vertices = _parse_json(text)
    else:
        vertices = _parse_text(text)
    logger.debug(f"Parsed {len(vertices)} vertices from {name}")
    return build_terrain(vertices)


def serialize_terrain(T: Terrain) -> str:
    """Text format with shortest round-trip float literals."""
    lines = [str(T.n)] + [f"{p.x!r} {p.y!r}" for p in T.chain]
    return "\n".join(lines) + "\n"


def write_terrain(T: Terrain, path: Union[str, Path]) -> None:
    try:
        Path(path).write_text(serialize_terrain(T), encoding="utf-8")
    except OSError as e:
        raise TerrainIOError(
            message=f"Cannot write terrain file {path}",
            path=str(path),
            original_error=str(e)
        ) from e

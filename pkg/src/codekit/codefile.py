# src/codekit/codefile.py
"""Reader and writer for the ``codefile v1`` text format.

    codefile v1
    q 2
    n 3
    systematic 0
    000
    111

``modulus`` (extension fields only) and ``systematic`` headers are optional.
Blank lines and ``#`` comments are ignored anywhere.
"""
import logging
from pathlib import Path
from typing import Optional, Union

from src.codekit.code import Code
from src.errors import CodeFileError, GriesmerLabError
from src.fieldcore import field_new

logger = logging.getLogger("codekit")

MAGIC = "codefile v1"


def format_code(code: Code) -> str:
    lines = [MAGIC, f"q {code.q}", f"n {code.n}"]
    if not code.field.is_prime_field:
        lines.append("modulus " + " ".join(str(c) for c in code.field.modulus))
    if code.systematic_coords is not None:
        lines.append(" ".join(["systematic", *(str(c) for c in code.systematic_coords)]))
    lines.extend("".join(str(x) for x in w) for w in code.sorted_words())
    return "\n".join(lines) + "\n"


def _ints(parts: list[str], lineno: int) -> list[int]:
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise CodeFileError(f"expected integers, got {' '.join(parts)!r}", lineno) from None


def parse_code(text: str) -> Code:
    headers: dict[str, tuple[list[int], int]] = {}
    words: list[tuple[int, ...]] = []
    seen: set[tuple[int, ...]] = set()
    seen_magic = False
    field = None
    n: Optional[int] = None

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if not seen_magic:
            if line != MAGIC:
                raise CodeFileError(f"expected {MAGIC!r} header, got {line!r}", lineno)
            seen_magic = True
            continue

        parts = line.split()
        key = parts[0]
        if key in ("q", "n", "modulus", "systematic"):
            if words:
                raise CodeFileError(f"header {key!r} after codewords", lineno)
            if key in headers:
                raise CodeFileError(f"duplicate header {key!r}", lineno)
            values = _ints(parts[1:], lineno)
            if key in ("q", "n") and len(values) != 1:
                raise CodeFileError(f"header {key!r} takes exactly one integer", lineno)
            headers[key] = (values, lineno)
            continue

        if field is None:
            if "q" not in headers or "n" not in headers:
                raise CodeFileError("codeword before the q and n headers", lineno)
            q_val, q_line = headers["q"]
            try:
                field = field_new(q_val[0])
            except GriesmerLabError as e:
                raise CodeFileError(str(e), q_line) from e
            n = headers["n"][0][0]
            if n < 1:
                raise CodeFileError(f"length must be positive, got {n}", headers["n"][1])
        if len(line) != n:
            raise CodeFileError(f"codeword has length {len(line)}, expected {n}", lineno)
        if not line.isdigit() or any(int(ch) >= field.q for ch in line):
            raise CodeFileError(f"codeword {line!r} has symbols outside [0, {field.q})", lineno)
        word = tuple(int(ch) for ch in line)
        if word in seen:
            raise CodeFileError(f"duplicate codeword {line!r}", lineno)
        words.append(word)
        seen.add(word)

    if not seen_magic:
        raise CodeFileError(f"missing {MAGIC!r} header", 1)
    if field is None:
        raise CodeFileError("no codewords")

    if "modulus" in headers:
        modulus, line_m = headers["modulus"]
        if tuple(modulus) != field.modulus:
            raise CodeFileError(
                f"modulus {modulus} does not match the GF({field.q}) modulus {list(field.modulus)}", line_m
            )

    systematic = None
    if "systematic" in headers:
        systematic = headers["systematic"][0]
    try:
        return Code.from_words(field, words, n=n, systematic_coords=systematic)
    except GriesmerLabError as e:
        raise CodeFileError(str(e), headers["systematic"][1] if systematic is not None else 0) from e


def read_code(path: Union[str, Path]) -> Code:
    path = Path(path)
    logger.info(f"Reading code from {path}")
    return parse_code(path.read_text(encoding="utf-8"))


def write_code(code: Code, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(format_code(code), encoding="utf-8")
    logger.info(f"Code {code} written to {path}")
    return path

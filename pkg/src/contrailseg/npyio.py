"""Bit-exact reader/writer for the NPY v1.0 binary array format.

Every dataset example ships as an ``.npy`` file, so the codec is pinned to
the exact on-disk layout:

    6-byte magic ``\\x93NUMPY`` | version bytes (1, 0) |
    2-byte little-endian header length | ASCII header dict
    (``descr``, ``fortran_order``, ``shape``) space-padded so the whole
    header ends on a 64-byte boundary with a trailing newline |
    raw little-endian element data.

Only version 1.0 is accepted; Fortran-ordered files are normalized to
row-major on read, and the writer always emits row-major little-endian
data. Supported dtypes: f32, f64, i64, u8, bool.
"""

from __future__ import annotations

import ast
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import (
    BadMagic,
    NonFiniteData,
    TruncatedPayload,
    UnsupportedDtype,
    UnsupportedVersion,
)

MAGIC = b"\x93NUMPY"
VERSION = (1, 0)
HEADER_ALIGN = 64

# dtype code -> NPY descr string (little-endian / single-byte only)
DTYPE_DESCRS = {
    "f32": "<f4",
    "f64": "<f8",
    "i64": "<i8",
    "u8": "|u1",
    "bool": "|b1",
}
_SUPPORTED_DESCRS = set(DTYPE_DESCRS.values())


@dataclass(frozen=True)
class ArrayHeader:
    """Parsed NPY header: element type, memory order, and extents."""

    descr: str
    fortran_order: bool
    shape: tuple[int, ...]

    @property
    def count(self) -> int:
        n = 1
        for extent in self.shape:
            n *= extent
        return n

    @property
    def itemsize(self) -> int:
        return np.dtype(self.descr).itemsize


def read_header(data: bytes) -> tuple[ArrayHeader, int]:
    """Parse the header of an NPY byte string.

    Returns the header and the byte offset where element data begins.
    """
    if data[:6] != MAGIC:
        raise BadMagic("not an NPY file (bad magic)")
    if len(data) < 10:
        raise TruncatedPayload("file shorter than the fixed NPY prelude")
    version = (data[6], data[7])
    if version != VERSION:
        raise UnsupportedVersion(f"NPY version {version[0]}.{version[1]} not supported (only 1.0)")
    header_len = int.from_bytes(data[8:10], "little")
    data_start = 10 + header_len
    if len(data) < data_start:
        raise TruncatedPayload("header extends past end of file")
    text = data[10:data_start].decode("ascii")

    try:
        fields = ast.literal_eval(text)
    except (ValueError, SyntaxError) as exc:
        raise BadMagic(f"unparseable NPY header: {exc}") from exc
    if not isinstance(fields, dict) or set(fields) != {"descr", "fortran_order", "shape"}:
        raise BadMagic("NPY header must contain exactly descr, fortran_order, shape")

    descr = fields["descr"]
    if descr not in _SUPPORTED_DESCRS:
        raise UnsupportedDtype(f"dtype descr {descr!r} not supported")
    shape = fields["shape"]
    if not isinstance(shape, tuple) or any(not isinstance(e, int) or e < 0 for e in shape):
        raise BadMagic(f"invalid shape in NPY header: {shape!r}")
    if not isinstance(fields["fortran_order"], bool):
        raise BadMagic("fortran_order must be a boolean")

    return ArrayHeader(descr=descr, fortran_order=fields["fortran_order"], shape=shape), data_start


def read_npy(data: bytes, strict_finite: bool = False) -> np.ndarray:
    """Decode NPY bytes into a row-major array.

    Fortran-ordered files are transposed to row-major in memory; the shape
    is preserved. With ``strict_finite`` (the brightness-temperature ingest
    mode), NaN or Inf in a floating array raises :class:`NonFiniteData`.
    """
    header, start = read_header(data)
    payload = data[start:]
    expected = header.count * header.itemsize
    if len(payload) != expected:
        raise TruncatedPayload(
            f"payload holds {len(payload)} bytes, header implies {expected}"
        )

    flat = np.frombuffer(payload, dtype=np.dtype(header.descr)).copy()
    order = "F" if header.fortran_order else "C"
    array = np.ascontiguousarray(flat.reshape(header.shape, order=order))

    if strict_finite and array.dtype.kind == "f" and not np.isfinite(array).all():
        raise NonFiniteData("array contains NaN or Inf in strict-finite mode")
    return array


def write_npy(array: np.ndarray) -> bytes:
    """Encode an array as NPY v1.0 bytes (row-major, little-endian).

    Round-trips exactly: ``read_npy(write_npy(a))`` equals ``a`` in shape,
    dtype, and every element.
    """
    array = np.asarray(array)
    descr = _descr_for(array.dtype)
    shape = tuple(int(e) for e in array.shape)

    text = "{" + "".join(
        f"'{key}': {value!r}, "
        for key, value in (("descr", descr), ("fortran_order", False), ("shape", shape))
    ) + "}"
    # prelude = magic + version + 2-byte length; pad so the full header is
    # a multiple of 64 bytes, terminating newline included
    unpadded = len(MAGIC) + 2 + 2 + len(text) + 1
    pad = HEADER_ALIGN - (unpadded % HEADER_ALIGN)
    header_text = text + " " * pad + "\n"

    out = bytearray()
    out += MAGIC
    out += bytes(VERSION)
    out += len(header_text).to_bytes(2, "little")
    out += header_text.encode("ascii")
    out += np.ascontiguousarray(array).tobytes()
    return bytes(out)


def load_npy(path: str | Path, strict_finite: bool = False) -> np.ndarray:
    return read_npy(Path(path).read_bytes(), strict_finite=strict_finite)


def save_npy(path: str | Path, array: np.ndarray) -> None:
    Path(path).write_bytes(write_npy(array))


def _descr_for(dtype: np.dtype) -> str:
    mapping = {
        np.dtype(np.float32): "<f4",
        np.dtype(np.float64): "<f8",
        np.dtype(np.int64): "<i8",
        np.dtype(np.uint8): "|u1",
        np.dtype(np.bool_): "|b1",
    }
    try:
        return mapping[np.dtype(dtype)]
    except KeyError:
        raise UnsupportedDtype(f"dtype {dtype!r} not supported") from None

"""Hexadecimal coding of skew-symmetric half sequences.

Only the D free spins are coded.  The code maps +1 to bit 0 and -1 to bit 1,
packs the first spin as the most significant of D bits, and renders the
resulting unsigned integer as hex using the minimal whole-nibble width for
D bits (left zero-padded, "0x" prefix).  Decoding reads the D least
significant bits of the hex value, so leading zero nibbles are harmless.

Energy is invariant under global spin negation, so the opposite polarity
convention would describe the same sequence family; this module fixes one
convention so round trips are exact.
"""

from __future__ import annotations

import numpy as np

from .core import as_spins, half_dim

__all__ = [
    "DecodeError",
    "encode",
    "decode",
    "pack_half",
    "unpack_half",
    "parse_record_line",
]


class DecodeError(ValueError):
    """Raised when hex text cannot represent a half sequence of the given length."""


def pack_half(half) -> int:
    """Pack a half sequence into its D-bit integer (first spin at the MSB)."""
    h = as_spins(half)
    value = 0
    for spin in h:
        # keep the accumulator a plain int; D can exceed 64 bits
        value = (value << 1) | int(spin < 0)
    return value


def unpack_half(value: int, d: int) -> np.ndarray:
    """Inverse of pack_half for a known component count d."""
    if value < 0 or value.bit_length() > d:
        raise ValueError(f"value does not fit in {d} bits")
    # plain-int bit walk: the value can exceed 64 bits
    return np.array(
        [-1 if (value >> (d - 1 - h)) & 1 else 1 for h in range(d)], dtype=np.int64
    )


def encode(half) -> str:
    """Hex-encode a half sequence, e.g. (+,+,+) -> '0x0' and (-,+,+) -> '0x4'."""
    h = as_spins(half)
    nibbles = (h.size + 3) // 4
    return f"0x{pack_half(h):0{nibbles}X}"


def decode(text: str, length: int) -> np.ndarray:
    """Decode hex text into the half sequence of an odd-length sequence.

    Args:
        text: hex digits with optional "0x"/"0X" prefix.
        length: declared full sequence length L (odd); D = (L + 1) / 2 spins
            are recovered.

    Raises:
        DecodeError: on non-hex input, even length, or when the value has
            more significant bits than D (the declared length is then
            inconsistent with the code).
    """
    if length < 1 or length % 2 == 0:
        raise DecodeError(f"declared length must be odd, got {length}")
    d = half_dim(length)
    stripped = text.strip()
    digits = stripped[2:] if stripped[:2] in ("0x", "0X") else stripped
    if not digits:
        raise DecodeError("empty hex string")
    try:
        value = int(digits, 16)
    except ValueError:
        raise DecodeError(f"not a hexadecimal string: {text!r}") from None
    if value.bit_length() > d:
        raise DecodeError(
            f"hex value needs {value.bit_length()} bits but length {length} "
            f"allows only {d}"
        )
    return unpack_half(value, d)


def parse_record_line(line: str) -> tuple[int, str, int | None, float | None]:
    """Parse one `L 0xHEX [E [F]]` record line.

    Returns (length, hex_text, claimed_energy, claimed_merit_factor) with the
    optional fields as None when absent.
    """
    fields = line.split()
    if len(fields) < 2 or len(fields) > 4:
        raise ValueError("expected `L 0xHEX [E [F]]`")
    try:
        length = int(fields[0])
    except ValueError:
        raise ValueError(f"bad length field {fields[0]!r}") from None
    claimed_e: int | None = None
    claimed_f: float | None = None
    if len(fields) >= 3:
        try:
            claimed_e = int(fields[2])
        except ValueError:
            raise ValueError(f"bad energy field {fields[2]!r}") from None
    if len(fields) == 4:
        try:
            claimed_f = float(fields[3])
        except ValueError:
            raise ValueError(f"bad merit factor field {fields[3]!r}") from None
    return length, fields[1], claimed_e, claimed_f

"""Block-based encoder/decoder for byte sequences over a small alphabet.

The variable-length scheme picks a delimiter symbol and a repeat count r,
then factors the input into blocks that each contain the delimiter exactly
r times; the occurrence that would be the (r+1)-th ends the block and is
consumed without being stored, because the decoder knows it must follow.
The tail of the input is padded with delimiters up to r occurrences (the
stored original length lets the decoder strip them); if the input ends
exactly on a consumed delimiter, no tail block is emitted at all.

Each block is serialized as

    [length codeword]   Elias delta, variable mode only
    [frequency rank]    rank of the block's count vector, in exactly
                        ceil(log2(#vectors)) bits; variable mode ranks the
                        reduced vector (delimiter dimension dropped, its
                        count is always r)
    [permutation rank]  rank of the block among arrangements of its own
                        multiset, in ceil(log2(#arrangements)) bits

A field whose value set has a single element occupies zero bits, which is
what skips the permutation rank for single-symbol blocks. The fixed-length
scheme cuts blocks of a constant length instead (last one short), dropping
the length codewords but ranking the full count vector.

All field widths are computable from the container header plus previously
decoded fields, so the payload carries no other framing.
"""

from __future__ import annotations

import math
import struct
from dataclasses import dataclass, field
from statistics import fmean

from .analysis import log2_int
from .bitstream import (
    BitReader,
    BitstreamError,
    BitWriter,
    elias_delta_bit_length,
)
from .combinatorics import CombinatoricsContext, ceil_log2, multinomial
from .composition_codec import index_to_vector, vector_to_index
from .permutation_codec import perm_index_to_sequence, sequence_to_perm_index

MAGIC = b"ENUM"
VERSION = 1
MODE_FIXED = "fixed"
MODE_VARIABLE = "variable"
_MODE_CODES = {MODE_FIXED: 0, MODE_VARIABLE: 1}
_MODE_NAMES = {code: name for name, code in _MODE_CODES.items()}


class AlphabetError(ValueError):
    """An input byte is not part of the declared alphabet."""

    def __init__(self, byte: int, offset: int):
        self.byte = byte
        self.offset = offset
        super().__init__(f"byte 0x{byte:02x} at offset {offset} is not in the alphabet")


class FormatError(ValueError):
    """The container header is malformed."""


class CorruptContainerError(ValueError):
    """The container payload is inconsistent with its header."""

    def __init__(self, message: str, block: int | None = None):
        self.block = block
        if block is not None:
            message = f"block {block}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class CodecParams:
    """Everything both sides must agree on before any payload bit is read.

    ``alpha_index`` is the 1-based position of the delimiter symbol in the
    alphabet; ``r`` its per-block occurrence count (variable mode).
    ``fixed_len`` is the block length of fixed mode. ``n`` is the original
    sequence length in symbols.
    """

    alphabet: bytes
    mode: str
    n: int
    alpha_index: int | None = None
    r: int | None = None
    fixed_len: int | None = None

    def __post_init__(self) -> None:
        if not isinstance(self.alphabet, bytes):
            raise ValueError("alphabet must be bytes")
        if not 1 <= len(self.alphabet) <= 0xFFFF:
            raise ValueError("alphabet must hold between 1 and 65535 symbols")
        if len(set(self.alphabet)) != len(self.alphabet):
            raise ValueError("alphabet entries must be distinct")
        if self.n < 0:
            raise ValueError("n must be non-negative")
        if self.mode == MODE_VARIABLE:
            if self.alpha_index is None or not 1 <= self.alpha_index <= self.sigma:
                raise ValueError("variable mode needs 1 <= alpha_index <= sigma")
            if self.r is None or self.r < 1:
                raise ValueError("variable mode needs r >= 1")
            if self.fixed_len is not None:
                raise ValueError("fixed_len is meaningless in variable mode")
        elif self.mode == MODE_FIXED:
            if self.fixed_len is None or self.fixed_len < 1:
                raise ValueError("fixed mode needs fixed_len >= 1")
            if self.alpha_index is not None or self.r is not None:
                raise ValueError("alpha_index/r are meaningless in fixed mode")
        else:
            raise ValueError(f"unknown mode {self.mode!r}")

    @classmethod
    def variable(cls, alphabet: bytes, alpha: bytes | int, r: int, n: int) -> "CodecParams":
        """Build variable-mode params from the delimiter symbol itself."""
        byte = alpha[0] if isinstance(alpha, (bytes, bytearray)) else int(alpha)
        try:
            index = alphabet.index(byte) + 1
        except ValueError:
            raise ValueError(f"delimiter symbol 0x{byte:02x} is not in the alphabet") from None
        return cls(alphabet=alphabet, mode=MODE_VARIABLE, n=n, alpha_index=index, r=r)

    @classmethod
    def fixed(cls, alphabet: bytes, fixed_len: int, n: int) -> "CodecParams":
        return cls(alphabet=alphabet, mode=MODE_FIXED, n=n, fixed_len=fixed_len)

    @property
    def sigma(self) -> int:
        return len(self.alphabet)

    @property
    def alpha_byte(self) -> int:
        if self.alpha_index is None:
            raise ValueError("no delimiter symbol in fixed mode")
        return self.alphabet[self.alpha_index - 1]


@dataclass(frozen=True)
class Block:
    """One factor of the input plus its derived metadata.

    ``freq`` spans the full alphabet; ``reduced_freq`` (variable mode) drops
    the delimiter dimension. ``pad_count`` delimiters were appended to
    ``content`` and is non-zero only on a final block.
    """

    content: bytes
    length: int
    freq: tuple[int, ...]
    perm_rank: int
    pad_count: int = 0
    reduced_freq: tuple[int, ...] | None = None


def _position_table(alphabet: bytes) -> list[int]:
    table = [-1] * 256
    for pos, byte in enumerate(alphabet):
        table[byte] = pos
    return table


def _make_block(
    content: bytes,
    freq: list[int],
    params: CodecParams,
    pad_count: int = 0,
) -> Block:
    rank = sequence_to_perm_index(content, params.alphabet)
    reduced = None
    if params.mode == MODE_VARIABLE:
        apos = params.alpha_index - 1
        reduced = tuple(c for i, c in enumerate(freq) if i != apos)
    return Block(
        content=content,
        length=len(content),
        freq=tuple(freq),
        perm_rank=rank,
        pad_count=pad_count,
        reduced_freq=reduced,
    )


def factorize_variable(data: bytes, params: CodecParams) -> list[Block]:
    """Split ``data`` into delimiter-bounded blocks (see module docstring).

    Every block's delimiter count is exactly ``r``; the final block may owe
    some of those to padding. An input ending exactly on a consumed
    delimiter produces no final block.
    """
    if params.mode != MODE_VARIABLE:
        raise ValueError("params are not variable-mode")
    if len(data) != params.n:
        raise ValueError(f"data length {len(data)} != declared n {params.n}")
    table = _position_table(params.alphabet)
    alpha = params.alpha_byte
    apos = params.alpha_index - 1
    r = params.r

    blocks: list[Block] = []
    freq = [0] * params.sigma
    start = 0
    for offset, byte in enumerate(data):
        pos = table[byte]
        if pos < 0:
            raise AlphabetError(byte, offset)
        if byte == alpha and freq[apos] == r:
            blocks.append(_make_block(data[start:offset], freq, params))
            start = offset + 1
            freq = [0] * params.sigma
        else:
            freq[pos] += 1

    residue = data[start:]
    if params.n == 0:
        return []
    if not residue and blocks:
        return blocks
    pad = r - freq[apos]
    freq[apos] = r
    blocks.append(_make_block(residue + bytes([alpha]) * pad, freq, params, pad_count=pad))
    return blocks


def factorize_fixed(data: bytes, params: CodecParams) -> list[Block]:
    """Split ``data`` into ceil(n / fixed_len) blocks; only the last may be short."""
    if params.mode != MODE_FIXED:
        raise ValueError("params are not fixed-mode")
    if len(data) != params.n:
        raise ValueError(f"data length {len(data)} != declared n {params.n}")
    table = _position_table(params.alphabet)
    for offset, byte in enumerate(data):
        if table[byte] < 0:
            raise AlphabetError(byte, offset)

    blocks = []
    for start in range(0, params.n, params.fixed_len):
        chunk = data[start : start + params.fixed_len]
        freq = [0] * params.sigma
        for byte in chunk:
            freq[table[byte]] += 1
        blocks.append(_make_block(chunk, freq, params))
    return blocks


def factorize(data: bytes, params: CodecParams) -> list[Block]:
    if params.mode == MODE_VARIABLE:
        return factorize_variable(data, params)
    return factorize_fixed(data, params)


def _freq_field(block: Block, params: CodecParams, ctx: CombinatoricsContext) -> tuple[int, int]:
    """(rank, width) of the block's frequency-vector field."""
    if params.mode == MODE_VARIABLE:
        reduced = block.reduced_freq
        if not reduced:  # single-symbol alphabet: nothing left to enumerate
            return 0, 0
        count = ctx.k_count(len(reduced), sum(reduced))
        return vector_to_index(reduced, ctx), ceil_log2(count)
    count = ctx.k_count(params.sigma, block.length)
    return vector_to_index(block.freq, ctx), ceil_log2(count)


def encode(data: bytes, params: CodecParams, ctx: CombinatoricsContext) -> "EncodedContainer":
    """Factorize ``data`` and serialize every block into a container."""
    blocks = factorize(data, params)
    writer = BitWriter()
    for block in blocks:
        if params.mode == MODE_VARIABLE:
            writer.write_elias_delta(block.length)
        rank, width = _freq_field(block, params, ctx)
        writer.write(rank, width)
        writer.write(block.perm_rank, ceil_log2(multinomial(block.freq)))
    return EncodedContainer(params=params, payload=writer.getvalue(), payload_bits=writer.bit_length)


def _decode_block_fields(
    reader: BitReader,
    length: int,
    params: CodecParams,
    ctx: CombinatoricsContext,
) -> tuple[tuple[int, ...], int]:
    """Read (frequency vector, permutation rank) for a block of known length."""
    if params.mode == MODE_VARIABLE:
        reduced_sigma = params.sigma - 1
        inner = length - params.r
        if reduced_sigma:
            count = ctx.k_count(reduced_sigma, inner)
            rank = reader.read(ceil_log2(count))
            if rank >= count:
                raise ValueError(f"frequency rank {rank} out of range (< {count})")
            reduced = index_to_vector(rank, inner, reduced_sigma, ctx)
        else:
            if inner:
                raise ValueError(f"length {length} exceeds r over a 1-symbol alphabet")
            reduced = ()
        apos = params.alpha_index - 1
        freq = reduced[:apos] + (params.r,) + reduced[apos:]
    else:
        count = ctx.k_count(params.sigma, length)
        rank = reader.read(ceil_log2(count))
        if rank >= count:
            raise ValueError(f"frequency rank {rank} out of range (< {count})")
        freq = index_to_vector(rank, length, params.sigma, ctx)

    arrangements = multinomial(freq)
    pid = reader.read(ceil_log2(arrangements))
    if pid >= arrangements:
        raise ValueError(f"permutation rank {pid} out of range (< {arrangements})")
    return freq, pid


def decode(container: "EncodedContainer", ctx: CombinatoricsContext) -> bytes:
    """Reconstruct the exact original byte sequence from a container."""
    params = container.params
    reader = BitReader(container.payload)
    contents: list[bytes] = []

    if params.n > 0 and params.mode == MODE_VARIABLE:
        total = 0
        index = 0
        # Reconstructed length including the delimiters between blocks:
        # stops at >= n - 1 because a sequence ending on a consumed
        # delimiter reconstructs one symbol short of n.
        while index == 0 or total + (index - 1) < params.n - 1:
            index += 1
            try:
                length = reader.read_elias_delta()
                if length < params.r:
                    raise ValueError(f"block length {length} is below r={params.r}")
                # a valid final block is at most the residue plus its padding
                if length > params.n + params.r:
                    raise ValueError(f"block length {length} exceeds the sequence length")
                freq, pid = _decode_block_fields(reader, length, params, ctx)
            except (BitstreamError, ValueError) as exc:
                raise CorruptContainerError(str(exc), block=index) from None
            contents.append(perm_index_to_sequence(pid, freq, params.alphabet))
            total += length
    elif params.n > 0:
        nblocks = -(-params.n // params.fixed_len)
        for index in range(1, nblocks + 1):
            length = params.fixed_len
            if index == nblocks:
                length = params.n - params.fixed_len * (nblocks - 1)
            try:
                freq, pid = _decode_block_fields(reader, length, params, ctx)
            except (BitstreamError, ValueError) as exc:
                raise CorruptContainerError(str(exc), block=index) from None
            contents.append(perm_index_to_sequence(pid, freq, params.alphabet))

    if reader.bits_remaining >= 8 or (
        reader.bits_remaining and reader.read(reader.bits_remaining)
    ):
        raise CorruptContainerError(
            "trailing garbage after the final block", block=len(contents)
        )

    if params.mode == MODE_FIXED:
        return b"".join(contents)
    joined = bytes([params.alpha_byte]).join(contents)
    if len(joined) < params.n:
        if len(joined) != params.n - 1:
            raise CorruptContainerError(
                f"reconstructed {len(joined)} symbols for n={params.n}",
                block=len(contents),
            )
        return joined + bytes([params.alpha_byte])
    pad = len(joined) - params.n
    if pad > params.r:
        raise CorruptContainerError(f"padding of {pad} exceeds r={params.r}", block=len(contents))
    if any(b != params.alpha_byte for b in joined[params.n :]):
        raise CorruptContainerError(
            "padding differs from the delimiter symbol", block=len(contents)
        )
    return joined[: params.n]


@dataclass(frozen=True)
class EncodedContainer:
    """Header parameters plus the packed payload bits.

    ``payload_bits`` is the used bit count before byte padding; it is
    encoder-side metadata (indistinguishable from padding on the wire), so
    it does not participate in equality.
    """

    params: CodecParams
    payload: bytes
    payload_bits: int = field(default=-1, compare=False)

    def __post_init__(self) -> None:
        if self.payload_bits < 0:
            object.__setattr__(self, "payload_bits", len(self.payload) * 8)

    def to_bytes(self) -> bytes:
        p = self.params
        head = bytearray()
        head += MAGIC
        head.append(VERSION)
        head.append(_MODE_CODES[p.mode])
        head += struct.pack(">H", p.sigma)
        head += p.alphabet
        head += struct.pack(">Q", p.n)
        if p.mode == MODE_VARIABLE:
            head += struct.pack(">HI", p.alpha_index, p.r)
        else:
            head += struct.pack(">I", p.fixed_len)
        return bytes(head) + self.payload

    @classmethod
    def from_bytes(cls, raw: bytes) -> "EncodedContainer":
        if raw[:4] != MAGIC:
            raise FormatError("not an enumerative-coding container (bad magic)")
        if len(raw) < 8:
            raise FormatError("truncated header")
        if raw[4] != VERSION:
            raise FormatError(f"unsupported container version {raw[4]}")
        mode = _MODE_NAMES.get(raw[5])
        if mode is None:
            raise FormatError(f"unknown mode byte {raw[5]}")
        (sigma,) = struct.unpack_from(">H", raw, 6)
        pos = 8
        if sigma < 1 or len(raw) < pos + sigma + 8:
            raise FormatError("truncated header")
        alphabet = raw[pos : pos + sigma]
        pos += sigma
        (n,) = struct.unpack_from(">Q", raw, pos)
        pos += 8
        try:
            if mode == MODE_VARIABLE:
                if len(raw) < pos + 6:
                    raise FormatError("truncated header")
                alpha_index, r = struct.unpack_from(">HI", raw, pos)
                pos += 6
                params = CodecParams(
                    alphabet=alphabet, mode=mode, n=n, alpha_index=alpha_index, r=r
                )
            else:
                if len(raw) < pos + 4:
                    raise FormatError("truncated header")
                (fixed_len,) = struct.unpack_from(">I", raw, pos)
                pos += 4
                params = CodecParams(alphabet=alphabet, mode=mode, n=n, fixed_len=fixed_len)
        except ValueError as exc:
            raise FormatError(f"invalid header field: {exc}") from None
        return cls(params=params, payload=raw[pos:])

    def header_length(self) -> int:
        """Header size in bytes."""
        base = 4 + 1 + 1 + 2 + self.params.sigma + 8
        return base + (6 if self.params.mode == MODE_VARIABLE else 4)


@dataclass(frozen=True)
class AccountedBits:
    """Formula-level bit budget of a factorization (container framing excluded).

    ``bits_ceiled`` charges every field its whole-bit width, the way the
    payload is actually packed; ``bits_real`` is the same sum with exact
    (fractional) logarithms, i.e. the information-content lower bound of
    this block structure.
    """

    bits_ceiled: int
    bits_real: float
    length_bits: int
    freq_bits: int
    perm_bits: int

    def per_base(self, n: int) -> float:
        return self.bits_ceiled / n if n else 0.0


def accounted_bits(
    blocks: list[Block], mode: str, ctx: CombinatoricsContext
) -> AccountedBits:
    """Sum the per-block field costs of a factorization.

    Variable mode charges ceil(log2 length) per block for the length (the
    container's self-delimiting codewords are accounted separately by
    :func:`container_bits`); fixed mode has no length component.
    """
    length_bits = freq_bits = perm_bits = 0
    real = 0.0
    for block in blocks:
        if mode == MODE_VARIABLE:
            length_bits += ceil_log2(block.length)
            real += math.log2(block.length)
            if block.reduced_freq:
                count = ctx.k_count(len(block.reduced_freq), sum(block.reduced_freq))
                freq_bits += ceil_log2(count)
                real += log2_int(count)
        else:
            count = ctx.k_count(len(block.freq), block.length)
            freq_bits += ceil_log2(count)
            real += log2_int(count)
        arrangements = multinomial(block.freq)
        perm_bits += ceil_log2(arrangements)
        real += log2_int(arrangements)
    return AccountedBits(
        bits_ceiled=length_bits + freq_bits + perm_bits,
        bits_real=real,
        length_bits=length_bits,
        freq_bits=freq_bits,
        perm_bits=perm_bits,
    )


def container_bits(blocks: list[Block], params: CodecParams, ctx: CombinatoricsContext) -> int:
    """Exact size, in bits, of the container :func:`encode` would emit."""
    payload = 0
    for block in blocks:
        if params.mode == MODE_VARIABLE:
            payload += elias_delta_bit_length(block.length)
        _, width = _freq_field(block, params, ctx)
        payload += width
        payload += ceil_log2(multinomial(block.freq))
    header = 4 + 1 + 1 + 2 + params.sigma + 8
    header += 6 if params.mode == MODE_VARIABLE else 4
    return header * 8 + 8 * (-(-payload // 8))


def average_block_length(blocks: list[Block]) -> float:
    return fmean(b.length for b in blocks) if blocks else 0.0


__all__ = [
    "AccountedBits",
    "AlphabetError",
    "Block",
    "CodecParams",
    "CorruptContainerError",
    "EncodedContainer",
    "FormatError",
    "MODE_FIXED",
    "MODE_VARIABLE",
    "accounted_bits",
    "average_block_length",
    "container_bits",
    "decode",
    "encode",
    "factorize",
    "factorize_fixed",
    "factorize_variable",
]

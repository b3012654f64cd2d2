"""Byte-pair-encoding token counter compatible with ``cl100k_base``.

The rank file is the published tiktoken format: one ``<base64 bytes> <rank>``
pair per line. It is read at run time (``--rank-file`` or ``ONTO_RANK_FILE``)
and never bundled with the package.

Encoding is the usual two stage process. The text is cut into chunks by the
pre-tokenization pattern, then each chunk's UTF-8 bytes are merged
greedily: the adjacent pair whose concatenation has the lowest rank is merged
first, leftmost on ties, until no adjacent pair is in the vocabulary.
"""

from __future__ import annotations

import base64
import binascii
import hashlib
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping

import regex

from .errors import MalformedRankFile

# cl100k_base pre-tokenization pattern, verbatim
CL100K_PATTERN = (
    r"""'(?i:[sdmt]|ll|ve|re)|[^\r\n\p{L}\p{N}]?+\p{L}++|\p{N}{1,3}+| ?[^\s\p{L}\p{N}]++[\r\n]*+|\s++$|\s*[\r\n]|\s+(?!\S)|\s"""
)

RANK_FILE_ENV = "ONTO_RANK_FILE"


@dataclass(frozen=True, eq=False)
class TokenizerModel:
    name: str
    ranks: Mapping[bytes, int] = field(repr=False)
    pattern: str = CL100K_PATTERN
    sha256: str = ""
    _regex: object = field(init=False, repr=False)
    # chunk bytes -> tuple of (rank, length); memo only, never observable
    _memo: dict = field(init=False, repr=False, default_factory=dict)

    def __post_init__(self):
        if not self.ranks:
            raise ValueError("a tokenizer model needs at least one rank")
        object.__setattr__(self, "_regex", regex.compile(self.pattern))

    def _merge(self, piece: bytes) -> tuple:
        cached = self._memo.get(piece)
        if cached is not None:
            return cached
        rank = self.ranks.get(piece)
        if rank is not None:
            result = ((rank, len(piece)),)
        else:
            result = tuple(
                (self.ranks.get(part, -1 - part[0] if len(part) == 1 else -1), len(part))
                for part in _byte_pair_merge(self.ranks, piece)
            )
        if len(self._memo) < 1_000_000:
            self._memo[piece] = result
        return result

    def _chunks(self, text: str):
        for chunk in self._regex.findall(text):
            yield _utf8(chunk)

    def encode_with_spans(self, text: str) -> list[tuple[int, tuple[int, int]]]:
        """Token ids with the ``[start, end)`` byte range each one covers.

        Bytes absent from a sparse vocabulary fall back to id ``-1 - byte``.
        """
        out = []
        offset = 0
        for piece in self._chunks(text):
            for rank, length in self._merge(piece):
                out.append((rank, (offset, offset + length)))
                offset += length
        return out

    def encode(self, text: str) -> list[int]:
        return [rank for piece in self._chunks(text) for rank, _ in self._merge(piece)]

    def count_tokens(self, text: str) -> int:
        return sum(len(self._merge(piece)) for piece in self._chunks(text))


def _utf8(text: str) -> bytes:
    try:
        return text.encode("utf-8")
    except UnicodeEncodeError:
        # lone surrogates: same replacement tiktoken applies
        return text.encode("utf-16", "surrogatepass").decode("utf-16", "replace").encode("utf-8")


def _byte_pair_merge(ranks: Mapping[bytes, int], piece: bytes) -> list[bytes]:
    parts = [piece[i:i + 1] for i in range(len(piece))]
    if len(parts) < 2:
        return parts
    missing = float("inf")
    pair_ranks = [ranks.get(parts[i] + parts[i + 1], missing) for i in range(len(parts) - 1)]
    while pair_ranks:
        best = min(pair_ranks)
        if best == missing:
            break
        i = pair_ranks.index(best)
        parts[i:i + 2] = [parts[i] + parts[i + 1]]
        del pair_ranks[i]
        if i < len(pair_ranks):
            pair_ranks[i] = ranks.get(parts[i] + parts[i + 1], missing)
        if i > 0:
            pair_ranks[i - 1] = ranks.get(parts[i - 1] + parts[i], missing)
    return parts


def parse_ranks(data: bytes) -> dict[bytes, int]:
    ranks: dict[bytes, int] = {}
    for lineno, line in enumerate(data.splitlines(), start=1):
        if not line.strip():
            continue
        fields = line.split()
        if len(fields) != 2:
            raise MalformedRankFile(lineno, "expected '<base64> <rank>'")
        try:
            token = base64.b64decode(fields[0], validate=True)
            rank = int(fields[1])
        except (binascii.Error, ValueError) as exc:
            raise MalformedRankFile(lineno, str(exc)) from None
        if not token or rank < 0:
            raise MalformedRankFile(lineno, "empty token or negative rank")
        if token in ranks:
            raise MalformedRankFile(lineno, f"duplicate token {fields[0].decode()}")
        ranks[token] = rank
    if not ranks:
        raise MalformedRankFile(1, "rank file is empty")
    return ranks


def load_model(rank_file, name: str | None = None) -> TokenizerModel:
    path = Path(rank_file)
    data = path.read_bytes()
    ranks = parse_ranks(data)
    stem = path.name.split(".")[0]
    return TokenizerModel(
        name=name or stem,
        ranks=ranks,
        sha256=hashlib.sha256(data).hexdigest(),
    )


def default_rank_file() -> str | None:
    return os.environ.get(RANK_FILE_ENV) or None

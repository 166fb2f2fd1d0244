"""Cross-check the a_n stream against an OEIS b-file.

Cache-first: a previously downloaded (or hand-dropped) b-file in the cache
directory is used without touching the network. Downloads are best-effort;
callers are expected to treat OeisUnavailable as "skip", not "fail", so the
check never blocks offline runs.
"""

from __future__ import annotations

import os
import urllib.error
import urllib.request
from pathlib import Path

from altprime.sequences import a_values

__all__ = [
    "DEFAULT_SEQUENCE",
    "OeisUnavailable",
    "b_file_url",
    "cache_dir",
    "check_a_stream",
    "fetch_b_file",
    "parse_b_file",
]

DEFAULT_SEQUENCE = "A008347"
CACHE_ENV = "ALTPRIME_CACHE"


class OeisUnavailable(RuntimeError):
    """No cached b-file and the network copy could not be fetched."""


def cache_dir(override: Path | str | None = None) -> Path:
    if override is not None:
        return Path(override)
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "altprime"


def b_file_url(seq_id: str) -> str:
    return f"https://oeis.org/{seq_id}/b{seq_id[1:]}.txt"


def parse_b_file(text: str) -> list[tuple[int, int]]:
    out = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) < 2:
            raise ValueError(f"unparseable b-file line: {line!r}")
        out.append((int(parts[0]), int(parts[1])))
    return out


def fetch_b_file(
    seq_id: str = DEFAULT_SEQUENCE,
    cache: Path | str | None = None,
    offline: bool = False,
    timeout: float = 30.0,
) -> list[tuple[int, int]]:
    cdir = cache_dir(cache)
    path = cdir / f"b{seq_id[1:]}.txt"
    if path.exists():
        return parse_b_file(path.read_text())
    if offline:
        raise OeisUnavailable(f"offline and no cached b-file at {path}")
    url = b_file_url(seq_id)
    try:
        with urllib.request.urlopen(url, timeout=timeout) as resp:
            text = resp.read().decode("utf-8", errors="replace")
    except (urllib.error.URLError, OSError, TimeoutError) as exc:
        raise OeisUnavailable(f"could not fetch {url}: {exc}") from exc
    parse_b_file(text)  # validate before caching
    cdir.mkdir(parents=True, exist_ok=True)
    path.write_text(text)
    return parse_b_file(text)


def check_a_stream(
    terms: list[tuple[int, int]], n_check: int
) -> tuple[int, list[tuple[int, int, int]]]:
    """Compare b-file entries with locally computed a_n for indices <= n_check.

    Index 0 (present in some b-files) is matched against a_0 = 0. Returns
    (number of indices compared, mismatches as (n, ours, theirs)).
    """
    if n_check < 1:
        raise ValueError(f"need n_check >= 1, got {n_check}")
    wanted = {n: v for n, v in terms if 0 <= n <= n_check}
    if not wanted:
        return 0, []
    hi = max(wanted)
    ours = a_values(hi) if hi >= 1 else None
    mismatches = []
    for n in sorted(wanted):
        mine = 0 if n == 0 else int(ours[n - 1])
        if mine != wanted[n]:
            mismatches.append((n, mine, wanted[n]))
    return len(wanted), mismatches

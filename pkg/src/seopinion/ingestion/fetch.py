"""Optional thin HTTP client for pulling live pages into fixtures.

Everything else in the package operates on saved HTML; none of the tests
touch the network.
"""

from __future__ import annotations

import urllib.request

_USER_AGENT = "Mozilla/5.0 (compatible; seopinion/0.1)"


def fetch_page(url: str, timeout: float = 30.0) -> str:
    """GET a page and decode it as UTF-8 (best effort)."""
    request = urllib.request.Request(url, headers={"User-Agent": _USER_AGENT})
    with urllib.request.urlopen(request, timeout=timeout) as response:
        return response.read().decode("utf-8", errors="replace")

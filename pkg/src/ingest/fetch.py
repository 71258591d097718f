"""
Mirror client for repodata.
Follows repodata/repomd.xml to the comps and primary files and stores them locally.
"""

import logging
from pathlib import Path
from typing import Dict, Optional, Union
from urllib.parse import urljoin, urlparse
from urllib.request import url2pathname

import httpx
from tenacity import (
    Retrying,
    before_sleep_log,
    retry_if_exception_type,
    stop_after_attempt,
    wait_exponential,
)

from ..config.constants import COMPS_DATA_TYPES, PRIMARY_DATA_TYPE, REPOMD_PATH
from ..config.settings import Settings, get_settings
from ..errors import IoError, NetworkError, NotFound
from .models import FetchedFile, FetchManifest
from .snapshot import gunzip
from .xml_utils import children, first_child, parse_document

logger = logging.getLogger(__name__)


class RepoFetcher:
    """Sequential downloader for one repodata mirror."""

    def __init__(
        self,
        settings: Optional[Settings] = None,
        client: Optional[httpx.Client] = None,
    ):
        """Initialize fetcher.

        Args:
            settings: Timeout and retry configuration. If None, uses get_settings().
            client: httpx client to reuse. If None, one is created per fetch.
        """
        self.settings = settings or get_settings()
        self._client = client

    def fetch(self, base_url: str, dest: Union[str, Path]) -> FetchManifest:
        """Download primary (and comps when referenced) into dest.

        Returns:
            Manifest of written files

        Raises:
            NetworkError: a download failed after retries
            NotFound: repomd has no primary entry, or no comps entry (the latter
                      after primary has been written; the manifest is attached)
            DecompressError: a .gz file is corrupt
            IoError: dest cannot be created or written
        """
        base = base_url if base_url.endswith("/") else base_url + "/"
        dest = Path(dest)
        try:
            dest.mkdir(parents=True, exist_ok=True)
        except OSError as e:
            raise IoError(dest, e.strerror or str(e)) from e

        locations = self._read_repomd(base)
        manifest = FetchManifest(base_url=base_url)

        primary_href = locations.get(PRIMARY_DATA_TYPE)
        if primary_href is None:
            raise NotFound("primary", manifest)
        manifest.entries.append(self._store(base, primary_href, dest, "primary"))

        comps_href = next((locations[t] for t in COMPS_DATA_TYPES if t in locations), None)
        if comps_href is None:
            logger.warning(f"{base_url} lists no comps metadata; continuing package-only")
            raise NotFound("comps", manifest)
        manifest.entries.append(self._store(base, comps_href, dest, "comps"))

        logger.info(f"Fetched {len(manifest.entries)} metadata files from {base_url}")
        return manifest

    def _read_repomd(self, base: str) -> Dict[str, str]:
        """Map repomd data types to their location hrefs."""
        root = parse_document(self.download(urljoin(base, REPOMD_PATH)), "repomd")
        locations: Dict[str, str] = {}
        for data in children(root, "data"):
            data_type = data.get("type")
            location = first_child(data, "location")
            if data_type and location is not None and location.get("href"):
                locations.setdefault(data_type, location.get("href"))
        return locations

    def _store(self, base: str, href: str, dest: Path, kind: str) -> FetchedFile:
        """Download one file, gunzip by suffix, write it under dest."""
        url = urljoin(base, href)
        raw = self.download(url)
        filename = Path(urlparse(url).path).name
        if filename.endswith(".gz"):
            raw = gunzip(raw, url)
            filename = filename[: -len(".gz")]

        target = dest / filename
        try:
            target.write_bytes(raw)
        except OSError as e:
            raise IoError(target, e.strerror or str(e)) from e
        logger.info(f"Stored {kind} metadata at {target} ({len(raw)} bytes)")
        return FetchedFile(kind=kind, path=str(target), size_bytes=len(raw))

    def download(self, url: str) -> bytes:
        """Fetch bytes from a file:// or http(s):// URL.

        Raises:
            NetworkError: on unreadable files, HTTP errors or exhausted retries
        """
        parsed = urlparse(url)
        if parsed.scheme == "file":
            path = Path(url2pathname(parsed.path))
            try:
                return path.read_bytes()
            except OSError as e:
                raise NetworkError(f"cannot read {url}: {e.strerror or e}") from e

        if parsed.scheme not in ("http", "https"):
            raise NetworkError(f"unsupported URL scheme in {url}")

        retryer = Retrying(
            stop=stop_after_attempt(self.settings.fetch_max_attempts),
            wait=wait_exponential(multiplier=0.5, min=0.5, max=10),
            retry=retry_if_exception_type(httpx.TransportError),
            before_sleep=before_sleep_log(logger, logging.WARNING),
            reraise=True,
        )
        try:
            return retryer(self._http_get, url)
        except httpx.HTTPStatusError as e:
            raise NetworkError(f"{url} returned HTTP {e.response.status_code}") from e
        except httpx.HTTPError as e:
            raise NetworkError(f"{url}: {e}") from e

    def _http_get(self, url: str) -> bytes:
        if self._client is not None:
            response = self._client.get(url)
        else:
            with httpx.Client(
                timeout=self.settings.fetch_timeout_seconds, follow_redirects=True
            ) as client:
                response = client.get(url)
        response.raise_for_status()
        return response.content


def fetch_repo_metadata(
    base_url: str,
    dest: Union[str, Path],
    settings: Optional[Settings] = None,
    client: Optional[httpx.Client] = None,
) -> FetchManifest:
    """Download a mirror's comps and primary files into dest."""
    return RepoFetcher(settings=settings, client=client).fetch(base_url, dest)

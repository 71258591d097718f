"""
Tests for the repodata mirror client.
"""

import gzip
from pathlib import Path

import httpx
import pytest

from ..config.settings import Settings
from ..errors import IoError, NetworkError, NotFound
from ..ingest import RepoFetcher, fetch_repo_metadata

pytestmark = pytest.mark.unit

REPOMD = """<?xml version="1.0" encoding="UTF-8"?>
<repomd xmlns="http://linux.duke.edu/metadata/repo" xmlns:rpm="http://linux.duke.edu/metadata/rpm">
  <revision>1</revision>
{entries}
</repomd>
"""

DATA = '  <data type="{kind}"><location href="{href}"/></data>'


def _repomd(**locations: str) -> bytes:
    entries = "\n".join(DATA.format(kind=kind, href=href) for kind, href in locations.items())
    return REPOMD.format(entries=entries).encode("utf-8")


@pytest.fixture
def mirror(tmp_path, comps_bytes, primary_bytes):
    """A file:// mirror with gzipped primary and plain comps."""
    root = tmp_path / "mirror"
    repodata = root / "repodata"
    repodata.mkdir(parents=True)
    (repodata / "abc-primary.xml.gz").write_bytes(gzip.compress(primary_bytes))
    (repodata / "def-comps.xml").write_bytes(comps_bytes)
    (repodata / "repomd.xml").write_bytes(
        _repomd(
            primary="repodata/abc-primary.xml.gz",
            primary_db="repodata/abc-primary.sqlite.bz2",
            group="repodata/def-comps.xml",
        )
    )
    return root


class TestFileMirror:
    """Fetching through file:// URLs."""

    def test_fetches_primary_and_comps(self, mirror, tmp_path, comps_bytes, primary_bytes):
        """Both files land in dest; .gz is decompressed and the suffix dropped."""
        dest = tmp_path / "out"

        manifest = fetch_repo_metadata(mirror.as_uri(), dest)

        assert [entry.kind for entry in manifest.entries] == ["primary", "comps"]
        assert Path(manifest.path_for("primary")).name == "abc-primary.xml"
        assert Path(manifest.path_for("primary")).read_bytes() == primary_bytes
        assert Path(manifest.path_for("comps")).read_bytes() == comps_bytes
        assert manifest.entries[1].size_bytes == len(comps_bytes)

    def test_missing_comps_keeps_primary(self, mirror, tmp_path):
        """No group entry: NotFound('comps') carries the partial manifest."""
        (mirror / "repodata" / "repomd.xml").write_bytes(
            _repomd(primary="repodata/abc-primary.xml.gz")
        )

        with pytest.raises(NotFound) as exc_info:
            fetch_repo_metadata(mirror.as_uri(), tmp_path / "out")

        assert exc_info.value.resource == "comps"
        assert [entry.kind for entry in exc_info.value.manifest.entries] == ["primary"]
        assert (tmp_path / "out" / "abc-primary.xml").exists()

    def test_group_gz_accepted(self, mirror, tmp_path, comps_bytes):
        """A gzipped comps entry is used when no plain one exists."""
        (mirror / "repodata" / "def-comps.xml.gz").write_bytes(gzip.compress(comps_bytes))
        (mirror / "repodata" / "repomd.xml").write_bytes(
            _repomd(primary="repodata/abc-primary.xml.gz", group_gz="repodata/def-comps.xml.gz")
        )

        manifest = fetch_repo_metadata(mirror.as_uri(), tmp_path / "out")

        assert Path(manifest.path_for("comps")).read_bytes() == comps_bytes

    def test_missing_primary_raises(self, mirror, tmp_path):
        """A repomd without primary is NotFound('primary')."""
        (mirror / "repodata" / "repomd.xml").write_bytes(_repomd(group="repodata/def-comps.xml"))

        with pytest.raises(NotFound) as exc_info:
            fetch_repo_metadata(mirror.as_uri(), tmp_path / "out")

        assert exc_info.value.resource == "primary"

    def test_missing_repomd_raises(self, tmp_path):
        """A directory without repodata is a NetworkError."""
        with pytest.raises(NetworkError):
            fetch_repo_metadata(tmp_path.as_uri(), tmp_path / "out")

    def test_destination_under_a_file_raises(self, mirror, tmp_path):
        """A destination that cannot be created is an IoError naming it."""
        blocker = tmp_path / "blocker"
        blocker.write_text("not a directory")

        with pytest.raises(IoError) as exc_info:
            fetch_repo_metadata(mirror.as_uri(), blocker / "out")

        assert exc_info.value.exit_code == 2
        assert str(blocker / "out") in str(exc_info.value)

    def test_unwritable_target_raises(self, mirror, tmp_path):
        """A directory in the way of a metadata file is an IoError naming the file."""
        dest = tmp_path / "out"
        (dest / "abc-primary.xml").mkdir(parents=True)

        with pytest.raises(IoError, match="abc-primary.xml"):
            fetch_repo_metadata(mirror.as_uri(), dest)


class TestHttpMirror:
    """Fetching over HTTP with an injected client."""

    BASE = "https://mirror.example.org/os/"

    def _client(self, mocker, files):
        def get(url):
            request = httpx.Request("GET", url)
            if url not in files:
                return httpx.Response(404, request=request)
            return httpx.Response(200, content=files[url], request=request)

        client = mocker.Mock(spec=httpx.Client)
        client.get.side_effect = get
        return client

    def test_downloads_through_client(self, mocker, tmp_path, comps_bytes, primary_bytes):
        """URLs are resolved against the base and fetched with the given client."""
        client = self._client(
            mocker,
            {
                self.BASE + "repodata/repomd.xml": _repomd(
                    primary="repodata/p.xml.gz", group="repodata/c.xml"
                ),
                self.BASE + "repodata/p.xml.gz": gzip.compress(primary_bytes),
                self.BASE + "repodata/c.xml": comps_bytes,
            },
        )

        manifest = fetch_repo_metadata(self.BASE, tmp_path, client=client)

        assert Path(manifest.path_for("primary")).read_bytes() == primary_bytes
        assert client.get.call_count == 3

    def test_http_error_is_network_error(self, mocker, tmp_path):
        """A 404 on repomd is reported as NetworkError."""
        client = self._client(mocker, {})

        with pytest.raises(NetworkError) as exc_info:
            fetch_repo_metadata(self.BASE, tmp_path, client=client)

        assert "404" in str(exc_info.value)

    def test_transport_errors_are_retried(self, mocker, tmp_path):
        """A transient connection failure is retried."""
        mocker.patch("time.sleep")
        url = self.BASE + "repodata/repomd.xml"
        ok = httpx.Response(200, content=b"payload", request=httpx.Request("GET", url))
        client = mocker.Mock(spec=httpx.Client)
        client.get.side_effect = [httpx.ConnectError("connection reset"), ok]
        fetcher = RepoFetcher(settings=Settings(fetch_max_attempts=2), client=client)

        assert fetcher.download(url) == b"payload"
        assert client.get.call_count == 2

    def test_retries_exhausted(self, mocker):
        """Persistent transport failures end in NetworkError."""
        mocker.patch("time.sleep")
        client = mocker.Mock(spec=httpx.Client)
        client.get.side_effect = httpx.ConnectError("down")
        fetcher = RepoFetcher(settings=Settings(fetch_max_attempts=2), client=client)

        with pytest.raises(NetworkError):
            fetcher.download(self.BASE + "repodata/repomd.xml")

        assert client.get.call_count == 2

    def test_unsupported_scheme(self):
        """Only file, http and https are accepted."""
        with pytest.raises(NetworkError):
            RepoFetcher(settings=Settings()).download("ftp://mirror.example.org/repomd.xml")

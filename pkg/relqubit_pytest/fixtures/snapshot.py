# ruff: noqa: S101
"""Compare reports against golden files stored next to the tests."""

from __future__ import annotations

import os
from collections import defaultdict
from pathlib import Path
from typing import TYPE_CHECKING

import pytest
from str_to_bool import str_to_bool

from relqubit.serialization_mixin import SerializationMixin

if TYPE_CHECKING:
    from collections.abc import Generator

    from _pytest.fixtures import SubRequest


class ReportSnapshot:
    """Golden-file context of a single test.

    Text is stored as is, any other value as indented JSON. A missing golden
    file fails the test like a mismatch; run with overriding on to record it.
    """

    def __init__(
        self: ReportSnapshot,
        *,
        test_id: str,
        path: Path,
        override: bool,
        prefix: str | None,
    ) -> None:
        """Create a new report snapshot context."""
        self.prefix = prefix
        self.override = override
        self._is_failed = False
        self.test_counter: dict[str | None, int] = defaultdict(int)
        file = path.with_suffix('').name
        self.results_dir = Path(
            path.parent / 'results' / file / test_id.split('::')[-1][5:],
        )
        if self.results_dir.exists():
            for stale in self.results_dir.glob(
                f'{self._stem_prefix}*'
                if override
                else f'{self._stem_prefix}*.mismatch.*',
            ):
                stale.unlink()  # pragma: no cover
        self.results_dir.mkdir(parents=True, exist_ok=True)

    @property
    def _stem_prefix(self: ReportSnapshot) -> str:
        return 'report-' + (f'{self.prefix}-' if self.prefix else '')

    def get_filename(self: ReportSnapshot, title: str | None) -> str:
        """Get the filename for the snapshot."""
        title_element = f'{title}-' if title else ''
        return f'{self._stem_prefix}{title_element}{self.test_counter[title]:03d}'

    @staticmethod
    def render(report: object) -> tuple[str, str]:
        """Return the text of a report and the suffix of its golden file."""
        if isinstance(report, str):
            return report.rstrip('\n'), '.txt'
        return SerializationMixin.to_json(report), '.jsonc'

    def take(
        self: ReportSnapshot,
        report: object,
        *,
        title: str | None = None,
    ) -> None:
        """Compare a report with its golden file, or record it when overriding."""
        filename = self.get_filename(title)
        new_snapshot, suffix = self.render(report)
        path = self.results_dir / filename
        golden_path = path.with_suffix(suffix)
        mismatch_path = path.with_suffix('.mismatch' + suffix)

        if self.override:
            golden_path.write_text(f'// {filename}\n{new_snapshot}\n')
        else:
            old_snapshot = (
                golden_path.read_text().split('\n', 1)[1][:-1]
                if golden_path.exists()
                else None
            )
            if old_snapshot != new_snapshot:  # pragma: no cover
                self._is_failed = True
                mismatch_path.write_text(
                    f'// MISMATCH: {filename}\n{new_snapshot}\n',
                )
            assert (
                new_snapshot == old_snapshot
            ), f'Report snapshot mismatch - {filename}'

        self.test_counter[title] += 1

    def close(self: ReportSnapshot) -> None:
        """Check that no golden file was left untaken."""
        if self._is_failed or self.override:  # pragma: no cover
            return
        for title in self.test_counter:
            filename = self.get_filename(title)
            leftovers = list(self.results_dir.glob(f'{filename}.*'))
            assert not leftovers, f'Snapshot {filename} not taken'


@pytest.fixture
def snapshot_prefix() -> str | None:
    """Return the prefix for the snapshots."""
    return None


@pytest.fixture
def report_snapshot(
    request: SubRequest,
    snapshot_prefix: str | None,
) -> Generator[ReportSnapshot, None, None]:
    """Compare reports of the test with its golden files."""
    override = bool(
        request.config.getoption('--override-report-snapshots', default=False),
    ) or str_to_bool(os.environ.get('RELQUBIT_OVERRIDE_SNAPSHOTS', 'false')) == 1
    snapshot = ReportSnapshot(
        test_id=request.node.nodeid,
        path=request.node.path,
        override=override,
        prefix=snapshot_prefix,
    )
    yield snapshot
    snapshot.close()

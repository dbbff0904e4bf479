# -*- coding: utf-8 -*-

from importlib.metadata import PackageNotFoundError, version as distribution_version

import pytest

import osp_rops
from osp_rops.cli import main


def _installed_version():
    try:
        return distribution_version("osp-rops")
    except PackageNotFoundError:
        return "0+unknown"


def test_package_exports_distribution_version():
    assert osp_rops.__version__ == _installed_version()


def test_ospx_version_reports_installed_package_version(capsys):
    with pytest.raises(SystemExit) as exc_info:
        main(["--version"])

    assert exc_info.value.code == 0
    assert capsys.readouterr().out.strip() == f"ospx {_installed_version()}"

# -*- coding: utf-8 -*-

import logging

from rich.logging import RichHandler

from osp_rops.commands.output_control import enabled, log_level, output_level
from osp_rops.utils.logging_setup import OutputLevelFilter, configure_logging


class _Args:
    def __init__(self, level=None):
        if level is not None:
            self.output_level = level


def test_configure_logging_installs_one_handler_and_moves_level():
    logger = configure_logging(logging.WARNING, logger_name="osp_rops.test_setup")
    configure_logging(logging.DEBUG, logger_name="osp_rops.test_setup")
    handlers = [h for h in logger.handlers if isinstance(h, RichHandler)]
    assert len(handlers) == 1
    filters = [f for f in handlers[0].filters if isinstance(f, OutputLevelFilter)]
    assert len(filters) == 1
    assert filters[0].level == logging.DEBUG
    assert logger.level == logging.DEBUG
    assert logger.propagate is False


def test_output_level_filter():
    record = logging.LogRecord("osp_rops", logging.INFO, __file__, 1, "msg", (), None)
    assert OutputLevelFilter(logging.WARNING).filter(record) is False
    assert OutputLevelFilter(logging.INFO).filter(record) is True


def test_output_levels_map_to_log_levels():
    assert output_level(_Args()) == "quiet"
    assert output_level(_Args("LOUD")) == "quiet"
    assert log_level(_Args("verbose")) == logging.INFO
    assert log_level(_Args("debug")) == logging.DEBUG
    assert enabled(_Args("debug"), "verbose")
    assert not enabled(_Args("quiet"), "verbose")

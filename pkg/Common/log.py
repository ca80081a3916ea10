import logging
import sys

LOG_FORMAT = '%(asctime)s [%(filename)s:%(lineno)s] %(message)s'
DATE_FORMAT = '%Y-%m-%d %H:%M:%S'


def configure_logging(verbosity: int = 0) -> None:
    """ Routes log records to stderr. 0 -> WARNING, 1 -> INFO, 2+ -> DEBUG """
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbosity, logging.DEBUG)
    logging.basicConfig(format=LOG_FORMAT, datefmt=DATE_FORMAT, level=level, stream=sys.stderr, force=True)

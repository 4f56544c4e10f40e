"""Root logger configuration for the command-line tools."""
import logging
import sys

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def setup_logging(level: str = "INFO") -> None:
    """
    Configure the root logger once; later calls only adjust the level.

    Log records go to stderr so command output on stdout stays machine readable.
    """
    root = logging.getLogger()
    if not root.handlers:
        logging.basicConfig(level=level.upper(), format=LOG_FORMAT, stream=sys.stderr)
    root.setLevel(level.upper())

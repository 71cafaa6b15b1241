import logging
import os
import traceback
from datetime import datetime
from typing import Mapping, Optional

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


class Logger:
    """Named logger writing a daily file under logs_dir plus a stderr console handler.

    stdout is reserved for reports, so the console handler never writes there.
    Pass logs_dir=None to skip the file handler (tests, one-off library calls).
    """

    def __init__(self, name: str, logs_dir: Optional[str] = None, console_level: str = "WARNING"):
        self.logger = logging.getLogger(name)
        self.logger.setLevel(logging.INFO)
        self.logger.propagate = False

        if self.logger.handlers:
            return

        formatter = logging.Formatter(LOG_FORMAT)

        if logs_dir:
            os.makedirs(logs_dir, exist_ok=True)
            log_file = os.path.join(logs_dir, f"{name}_{datetime.now().strftime('%Y%m%d')}.log")
            file_handler = logging.FileHandler(log_file, encoding="utf-8")
            file_handler.setLevel(logging.INFO)
            file_handler.setFormatter(formatter)
            self.logger.addHandler(file_handler)

        console_handler = logging.StreamHandler()  # stderr
        console_handler.setLevel(getattr(logging, console_level.upper(), logging.WARNING))
        console_handler.setFormatter(formatter)
        self.logger.addHandler(console_handler)

    def info(self, message: str) -> None:
        self.logger.info(message)

    def error(self, message: str) -> None:
        self.logger.error(message)

    def warning(self, message: str) -> None:
        self.logger.warning(message)

    def debug(self, message: str) -> None:
        self.logger.debug(message)

    def log_response_summary(self, title: str, counts: Mapping[str, int]) -> None:
        parts = ", ".join(f"{key}={value}" for key, value in counts.items())
        self.logger.info(f"{title}: {parts if parts else 'nothing solved'}")

    def log_exception_stack_trace(self, exception: Exception) -> None:
        self.logger.error(f"Exception: {exception}")
        self.logger.error(f"Stack trace: {traceback.format_exc()}")

#!/usr/bin/env python3
"""
Super Domination Workbench - Main Entry Point
Recomputes the reference fixtures and reports pass/fail per expectation
"""

import sys
import json
import logging
from pathlib import Path

# Add src to path
sys.path.insert(0, str(Path(__file__).parent))

from config import get_config
from harness.fixtures import run_fixture_suite

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


def setup_logging(log_file: str = None, level: int = logging.INFO, stream=None):
    """Setup logging configuration"""
    handlers = [logging.StreamHandler(stream or sys.stdout)]

    if log_file:
        Path(log_file).parent.mkdir(parents=True, exist_ok=True)
        handlers.append(logging.FileHandler(log_file))

    logging.basicConfig(
        level=level,
        format=LOG_FORMAT,
        handlers=handlers,
        force=True,
    )


def main():
    """Main entry point"""
    config = get_config()

    setup_logging(
        log_file=config.logging.file,
        level=getattr(logging, config.logging.level.upper(), logging.INFO)
    )

    logger = logging.getLogger("superdom")

    logger.info("=" * 60)
    logger.info("Super Domination Workbench - fixture suite")
    logger.info("=" * 60)

    try:
        report = run_fixture_suite()
        print("\n" + json.dumps(report.to_dict(), indent=2))

        if report.passed:
            logger.info(f"All {len(report.results)} fixture expectations hold")
            return 0

        for failure in report.failures():
            logger.error(f"FAILED {failure.name}: expected {failure.expected}, got {failure.actual}")
        return 4

    except KeyboardInterrupt:
        logger.info("\nInterrupted by user")
        return 1
    except Exception as e:
        logger.error(f"Error: {e}", exc_info=True)
        return 1


if __name__ == "__main__":
    sys.exit(main())

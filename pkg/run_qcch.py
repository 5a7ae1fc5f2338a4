#!/usr/bin/env python3

if __name__ == "__main__":
    import os
    import sys
    from dotenv import load_dotenv

    load_dotenv()

    # Assurer que le PYTHONPATH est correct
    sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

    from qcch.cli import cli
    from qcch.config.paths import ensure_directories

    ensure_directories()

    cli(obj={})

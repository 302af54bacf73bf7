"""Entry point for the hyperalpha CLI."""

from hyperalpha.cli import main

if __name__ == "__main__":
    raise SystemExit(main())

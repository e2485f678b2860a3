"""Entry point for `python -m groupoidlab`."""

from groupoidlab.cli.main import main

if __name__ == "__main__":
    main()

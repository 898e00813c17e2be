import sys

from verspec.cli.commands import main

if __name__ == "__main__":

    sys.exit(main())

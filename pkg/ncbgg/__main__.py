import sys
from ncbgg.workbench.Cli import run_parser


if __name__ == '__main__':
    sys.exit(run_parser())

import os
import sys


sys.path.append(os.path.abspath(os.path.dirname(__file__)))
from src.cli import main


if __name__ == "__main__":
    sys.exit(main())

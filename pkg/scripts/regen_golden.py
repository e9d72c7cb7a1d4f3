"""Regenerate the golden verify reports of the shipped fixtures."""
import sys

from toricbordism.cli import main
from toricbordism.library import FIXTURE_NAMES, golden_path

if __name__ == "__main__":
    names = sys.argv[1:] or FIXTURE_NAMES
    for name in names:
        code = main(["verify", name, "--out", str(golden_path(name))])
        print(f"{name}: exit {code}")

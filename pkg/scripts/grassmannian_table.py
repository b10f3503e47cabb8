"""Print the EQ multiplication table of Gr(2,4) = A3 / <s1, s3>.

    python3 scripts/grassmannian_table.py [--json]
"""
import sys

from eqsc.cli import main

if __name__ == "__main__":
    fmt = "json" if "--json" in sys.argv[1:] else "text"
    sys.exit(main(["table", "--group", "A3", "--parabolic", "1 3", "--format", fmt]))

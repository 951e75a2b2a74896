import sys
from pathlib import Path

SRC = Path(__file__).resolve().parent.parent / "src"
if str(SRC) not in sys.path:
    try:
        import splitbp  # noqa: F401
    except ImportError:
        sys.path.insert(0, str(SRC))

import sys
from pathlib import Path
from typing import Optional, TextIO

HEADER_WIDTH = 60


def print_header(txt: str, width: int = HEADER_WIDTH, filler: str = "+", file: Optional[TextIO] = None) -> None:
    txt = f" {txt} " if txt else ""
    print(txt.center(width, filler), file=file or sys.stdout)


def write_text(path: Path, text: str) -> Path:
    path = Path(path)
    if path.parent and not path.parent.exists():
        path.parent.mkdir(parents=True)
    path.write_text(text)
    return path

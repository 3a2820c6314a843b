"""Rewrite the golden outputs listed in golden.json.  Run from the repository root."""
import contextlib
import io
import json
import pathlib

from gogeuler.cli import run

HERE = pathlib.Path(__file__).parent


def capture(argv):
    out = io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(io.StringIO()):
        code = run(argv)
    return out.getvalue(), code


def main():
    manifest = json.loads((HERE / "golden.json").read_text())
    for case in manifest["cases"]:
        text, code = capture(case["argv"])
        case["exit"] = code
        (HERE / "golden" / f"{case['name']}.out").write_text(text, encoding="utf-8")
    (HERE / "golden.json").write_text(json.dumps(manifest, indent=1) + "\n")


if __name__ == "__main__":
    main()

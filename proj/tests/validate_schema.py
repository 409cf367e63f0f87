"""Validates every --json document recorded in the corpus against the schema."""
import json
import pathlib
import sys

import jsonschema


def main(schema_path, corpus_root):
    schema = json.loads(pathlib.Path(schema_path).read_text())
    validator = jsonschema.Draft202012Validator(schema)
    checked = failed = 0
    for path in sorted(pathlib.Path(corpus_root).rglob("*.expected.json")):
        for entry in json.loads(path.read_text()):
            doc = entry["output"]
            if doc is None:
                continue
            checked += 1
            errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.path))
            for e in errors[:3]:
                print(f"{path}: {entry['invoke']}: {'/'.join(map(str, e.path))}: {e.message}")
            failed += bool(errors)
    print(f"{checked - failed}/{checked} documents valid")
    return 1 if failed or checked == 0 else 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1], sys.argv[2]))

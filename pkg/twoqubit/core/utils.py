# Standard Library
import csv
import enum
import json
import math

# Third Party
import numpy as np

# TwoQubit
import twoqubit


def output_path(stem, suffix):
    """Path of one of the files a command writes for the given output stem"""
    return f"{stem}.{suffix}"


def format_float(value):
    """Floats are written with 17 significant digits so they read back exactly"""
    value = float(value)
    if math.isnan(value):
        return "nan"
    return f"{value:.17g}"


def format_cell(value):
    if value is None:
        return ""
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (float, np.floating)):
        return format_float(value)
    if isinstance(value, enum.Enum):
        return str(value.value)
    return str(value)


def provenance(command_line, seed=None, tolerances=None):
    """Header information embedded in every output file"""
    return {
        "version": twoqubit.__version__,
        "command": command_line,
        "seed": seed,
        "tolerances": dict(sorted((tolerances or {}).items())),
    }


def provenance_lines(info):
    tolerances = " ".join(
        f"{key}={format_float(value)}" for key, value in info["tolerances"].items()
    )
    return [
        f"# twoqubit {info['version']}",
        f"# command: {info['command']}",
        f"# seed: {'' if info['seed'] is None else info['seed']}",
        f"# tolerances: {tolerances}",
    ]


def write_csv(path, header, rows, info):
    with open(path, "w", newline="", encoding="utf-8") as outfile:
        for line in provenance_lines(info):
            outfile.write(line + "\n")
        writer = csv.writer(outfile, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([format_cell(value) for value in row])


def read_csv(path):
    """Read a CSV written by write_csv, returning the header and the data rows"""
    with open(path, newline="", encoding="utf-8") as infile:
        lines = [line for line in infile if line.strip() and not line.startswith("#")]
    reader = csv.reader(lines)
    header = next(reader, None)
    if header is None:
        return [], []
    return [name.strip() for name in header], list(reader)


def jsonable(value):
    """Convert numpy and enum values into plain JSON types"""
    # pylint: disable=too-many-return-statements
    if isinstance(value, dict):
        return {str(key): jsonable(item) for key, item in value.items()}
    if isinstance(value, (frozenset, set)):
        return sorted(jsonable(item) for item in value)
    if isinstance(value, (list, tuple)):
        return [jsonable(item) for item in value]
    if isinstance(value, np.ndarray):
        return jsonable(value.tolist())
    if isinstance(value, enum.Enum):
        return value.value
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        return None if math.isnan(value) else value
    return value


def write_json(path, payload, info):
    document = dict(jsonable(payload))
    document["provenance"] = jsonable(info)
    with open(path, "w", encoding="utf-8") as outfile:
        json.dump(document, outfile, indent=2, sort_keys=True)
        outfile.write("\n")


def read_json(path):
    with open(path, encoding="utf-8") as infile:
        return json.load(infile)

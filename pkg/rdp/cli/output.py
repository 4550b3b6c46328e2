"""
    File outputs of the command line interface: CSV tables, JSON-lines metadata records, witness dumps and
    optional plotting scripts. All text files use LF line endings.
"""
import csv
from datetime import datetime, timezone
import json
import math
import os
import numpy as np

FLOAT_FORMAT = '%.15g'

PLOT_TEMPLATE = '''"""
    Plots {ys} against {x} from {csv_name}
"""
import csv
import os
import matplotlib.pyplot as plt

here = os.path.dirname(os.path.abspath(__file__))
with open(os.path.join(here, {csv_name!r}), newline='') as f:
    rows = list(csv.DictReader(f))

x = [float(row[{x!r}]) for row in rows]
for column in {ys!r}:
    plt.plot(x, [float(row[column]) if row[column] else float('nan') for row in rows], '.-', label=column)
plt.xlabel({x!r})
plt.legend()
plt.savefig(os.path.join(here, {png_name!r}))
'''


def output_stem(path):
    """
        Output path without the .csv suffix, used to name all side files
    """
    root, ext = os.path.splitext(path)
    return root if ext.lower() == '.csv' else path


def format_value(value):
    """
        CSV cell: floats with 15 significant digits, booleans as 0/1, None as an empty cell, integers
        (of any size) exact
    """
    if value is None:
        return ''
    if isinstance(value, (bool, np.bool_)):
        return str(int(value))
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        value = float(value)
        if math.isnan(value):
            return 'nan'
        return FLOAT_FORMAT % value
    return str(value)


def write_csv(path, fieldnames, rows):
    """
        Writes the rows (dicts) with a header row
    """
    with open(path, 'w', newline='') as f:
        writer = csv.DictWriter(f, fieldnames=fieldnames, lineterminator='\n')
        writer.writeheader()
        for row in rows:
            writer.writerow({key: format_value(row[key]) for key in fieldnames})
    return path


def write_metadata(path, config, version, outputs, extra=None):
    """
        Writes exactly one JSON-lines metadata record: full effective config, code version, timestamp and
        the data files it describes
    """
    record = dict(config=config.as_dict(), version=version,
                  timestamp=datetime.now(timezone.utc).isoformat(), outputs=list(outputs))
    if extra:
        record.update(extra)
    with open(path, 'w', newline='') as f:
        f.write(json.dumps(record, sort_keys=True) + '\n')
    return path


def write_lines(path, lines):
    with open(path, 'w', newline='') as f:
        for line in lines:
            f.write(line + '\n')
    return path


def write_plot_script(path, csv_path, x, ys):
    """
        Writes a standalone matplotlib script that plots the columns ys against x of the CSV next to it
    """
    csv_name = os.path.basename(csv_path)
    png_name = os.path.splitext(csv_name)[0] + '.png'
    with open(path, 'w', newline='') as f:
        f.write(PLOT_TEMPLATE.format(x=x, ys=list(ys), csv_name=csv_name, png_name=png_name))
    return path

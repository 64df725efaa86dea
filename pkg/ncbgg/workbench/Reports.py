from typing import Any, Sequence



def format_table(headers: Sequence[str], rows: Sequence[Sequence[Any]], title: str=None) -> str:
    """
    Right-aligned plain-text table; None prints as '-'.
    """
    cells = [[str(h) for h in headers]] + [['-' if v is None else str(v) for v in row] for row in rows]
    widths = [max(len(r[c]) for r in cells) for c in range(len(headers))]
    lines = [] if title is None else [title]
    for k, row in enumerate(cells):
        lines.append('  '.join(f'{v:>{widths[c]}}' for c, v in enumerate(row)))
        if k == 0:
            lines.append('  '.join('-' * w for w in widths))
    return '\n'.join(lines)


def cohomology_text(table: dict[Any, dict[Any, int]], title: str='cohomology') -> str:
    """
    One row per position, one column per internal degree.
    """
    degrees = sorted(set(int(u) for row in table.values() for u in row.keys()))
    if len(degrees) == 0:
        return f'{title}\n(zero)'
    rows = []
    for p in sorted(table.keys(), key=int):
        row = {int(u): d for u, d in table[p].items()}
        rows.append([p] + [row.get(u, 0) for u in degrees])
    return format_table(['pos'] + [str(u) for u in degrees], rows, title=title)


def records_text(records: Sequence[dict[str, Any]], title: str=None) -> str:
    if len(records) == 0:
        return '' if title is None else f'{title}\n(none)'
    headers = list(records[0].keys())
    return format_table(headers, [[r.get(h, None) for h in headers] for r in records], title=title)


def mapping_text(values: dict[str, Any], title: str=None) -> str:
    return format_table(['key', 'value'], [[k, values[k]] for k in sorted(values.keys())], title=title)


def render(report: dict[str, Any]) -> str:
    """
    Human readable form of a command report: scalar entries as a key/value
    table, cohomology tables and record lists in their own sections.
    """
    scalars, sections = {}, []
    for key in sorted(report.keys()):
        value = report[key]
        if isinstance(value, dict) and key.endswith('cohomology'):
            sections.append(cohomology_text(value, title=key))
        elif isinstance(value, list) and len(value) > 0 and all(isinstance(v, dict) for v in value):
            sections.append(records_text(value, title=key))
        elif isinstance(value, dict):
            sections.append(mapping_text({str(k): v for k, v in value.items()}, title=key))
        else:
            scalars[key] = value
    parts = [mapping_text(scalars)] if len(scalars) > 0 else []
    return '\n\n'.join(parts + sections) + '\n'

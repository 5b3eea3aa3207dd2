"""
Result containers and JSON/TSV serialization
"""
import json
import logging
from dataclasses import dataclass, field
from typing import Any, List, Sequence

from common.errors import InvariantBreach
from config.settings import TSV_VERSION

logger = logging.getLogger(__name__)


@dataclass
class Output:
    """One command result: a JSON payload plus its fixed-column table form"""
    kind: str
    payload: Any
    header: Sequence[str]
    rows: List[Sequence[Any]] = field(default_factory=list)
    title: str = ''


def to_json(output: Output) -> str:
    """Serialize the payload; key order is fixed by the builders"""
    return json.dumps(output.payload, indent=2, ensure_ascii=False)


def format_cell(value: Any) -> str:
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if value is None:
        return ''
    return str(value).replace('\t', ' ').replace('\n', ' ')


def to_tsv(output: Output) -> str:
    """
    Serialize as a versioned TSV table

    Returns:
        "# winf-tsv v1 <kind>", the header row, then one line per row
    """
    lines = [f"# winf-tsv {TSV_VERSION} {output.kind}", "\t".join(output.header)]
    for row in output.rows:
        if len(row) != len(output.header):
            raise InvariantBreach(f"Row {row} does not match header {output.header}")
        lines.append("\t".join(format_cell(value) for value in row))
    return "\n".join(lines)


def series_rows(terms: List[dict]) -> List[List[Any]]:
    """Rows of a TruncatedSeries.to_dict() listing"""
    return [[term['partition'], term['z_exp'], term['coeff']] for term in terms]


def multiseries_rows(terms: List[dict]) -> List[List[Any]]:
    """Rows of a MultiSeries.to_dict() listing"""
    return [[",".join(str(e) for e in term['u_exps']), ";".join(term['partitions']), term['z_exp'], term['coeff']]
            for term in terms]


def operator_rows(operator: dict) -> List[List[Any]]:
    """Rows of a BlockOperator.to_dict() listing"""
    return [[block['n'], row['from'], row['to'], row['z_exp'], row['coeff']]
            for block in operator['blocks'] for row in block['rows']]

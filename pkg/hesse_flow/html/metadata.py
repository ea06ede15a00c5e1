from typing import Dict, Optional

import markdown2

from hesse_flow.utils import paramval2str


def _get_table(header, data) -> str:
    table = f'|{header[0]}|{header[1]}|\n'
    table += '|--|--|\n'
    for k, v in data.items():
        table += f'|{k}|{v}|\n'
    return table


def _get_parameter_table(params: Dict[str, object]) -> str:
    params = {k: paramval2str(k, v) for k, v in params.items()} or {'': ''}
    return _get_table(['Parameter', 'Value'], params)


def get_metadata_md(title: str, params: Dict[str, object], facts: Optional[Dict[str, object]] = None,
                    notes: Optional[list] = None) -> str:
    md = f'\n# {title}\n'
    md += '## Run\n'
    md += _get_parameter_table(params)
    if facts:
        md += '\n## Facts\n'
        md += _get_table(['Property', 'Value'], {k: paramval2str(k, v) for k, v in facts.items()})
    for note in notes or []:
        md += f'\n{note}\n'
    return md


def get_metadata_div(title: str, params: Dict[str, object], facts: Optional[Dict[str, object]] = None,
                     notes: Optional[list] = None) -> str:
    md = get_metadata_md(title, params, facts, notes)
    return markdown2.markdown(md, extras=['fenced-code-blocks', 'tables'])

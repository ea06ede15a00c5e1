from typing import Optional

from jinja2 import Environment, PackageLoader

import matplotlib.colors


def convert_color(color) -> str:
    """if color is a float value then it is interpreted as a shade of grey and converted to the corresponding html color code"""
    try:
        val = round(float(color) * 255.0)
        return '#{0:02x}{0:02x}{0:02x}'.format(val)
    except (TypeError, ValueError):
        return matplotlib.colors.to_hex(color)


_style_mpl2bokeh = {
    '-': 'solid',
    '--': 'dashed',
    ':': 'dotted',
    '.-': 'dotdash',
    '-.': 'dashdot',
    '=': 'solid',  # drawn twice, see is_double
}

_style_mpl2svg = {
    '-': None,
    '--': '6,4',
    ':': '1,3',
    '.-': '1,3,6,3',
    '-.': '6,3,1,3',
    '=': None,
}


def convert_linestyle(style: str) -> str:
    """Converts a matplotlib style string to bokeh style string"""
    return _style_mpl2bokeh[style]


def svg_dasharray(style: str) -> Optional[str]:
    return _style_mpl2svg[style]


def is_double(style: str) -> bool:
    return style == '='


def template_environment() -> Environment:
    return Environment(loader=PackageLoader('hesse_flow', 'templates'), trim_blocks=True, lstrip_blocks=True)


def generate_stylesheet(scheme, template='basic.css.j2') -> str:
    templ = template_environment().get_template(template)
    return templ.render(dict(
        body_background_color=scheme.body_background_color,
        text_color=scheme.text_color,
        headline_color=scheme.headline_color,
        table_row_color_even=scheme.table_color_even,
        table_row_color_odd=scheme.table_color_odd,
        table_header_color=scheme.table_header_color,
        tag_pre_background_color=scheme.tag_pre_background_color,
    ))

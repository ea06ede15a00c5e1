import json
import math
from typing import Any

from hesse_flow.utils import fmt_num


def _clean(obj: Any) -> Any:
    if isinstance(obj, float):
        if not math.isfinite(obj):
            return str(obj)
        return fmt_num(obj) + 0.0
    if isinstance(obj, complex):
        return [_clean(obj.real), _clean(obj.imag)]
    if isinstance(obj, dict):
        return {str(k): _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    if hasattr(obj, 'to_dict'):
        return _clean(obj.to_dict())
    return obj


def dumps(obj: Any) -> str:
    """JSON with numbers at 12 significant digits and keys in insertion order"""
    return json.dumps(_clean(obj), indent=2, ensure_ascii=False) + '\n'

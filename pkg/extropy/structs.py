from typing import Any

import msgspec
import numpy as np

STRUCT_KWARGS = {
    "omit_defaults": True,
    "forbid_unknown_fields": True,
}


def _enc_hook(obj: Any) -> Any:
    if isinstance(obj, np.generic):
        return obj.item()
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    # ProbabilityVector and anything else exposing its masses
    masses = getattr(obj, "masses", None)
    if isinstance(masses, np.ndarray):
        return masses.tolist()
    raise NotImplementedError(f"Objects of type {type(obj)} are not supported")


# A reusable encoder with custom hook to ensure serialization
msgspec_enc = msgspec.json.Encoder(enc_hook=_enc_hook)

# A reusable decoder which outputs a Python dictionary
msgspec_dec_dict = msgspec.json.Decoder(type=dict)


def to_builtins(obj: Any) -> Any:
    """Convert structs, arrays and probability vectors to plain Python objects."""
    return msgspec.to_builtins(obj, enc_hook=_enc_hook)

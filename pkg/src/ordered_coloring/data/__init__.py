"""Instance files and random generators."""

from ordered_coloring.data.instance_io import (
    INSTANCE_FORMAT,
    coloring_from_dict,
    decode_map_from_dict,
    instance_from_dict,
    instance_to_dict,
    load_coloring,
    load_instance,
    read_json,
    save_instance,
    write_json,
)
from ordered_coloring.data.generators import (
    make_rng,
    pattern_free_graph,
    random_cnf3,
    random_graph,
    random_instance,
    random_lists,
    random_nae,
    repair,
)

__all__ = [
    "INSTANCE_FORMAT",
    "instance_to_dict",
    "instance_from_dict",
    "coloring_from_dict",
    "decode_map_from_dict",
    "read_json",
    "write_json",
    "load_instance",
    "save_instance",
    "load_coloring",
    "make_rng",
    "random_graph",
    "random_lists",
    "repair",
    "pattern_free_graph",
    "random_instance",
    "random_cnf3",
    "random_nae",
]

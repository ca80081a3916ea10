from .model_loading import ModelSpec, load_model, read_matrix_csv, read_table_csv, read_graph_csv, parse_start
from .commands import cmd_sample, cmd_diagnose, cmd_init

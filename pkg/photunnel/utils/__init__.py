from .numdiff import DEFAULT_RELATIVE_STEP, relative_step, central_difference, log_derivative, halving_change, \
    HalvingCheck
from .output import format_csv, format_summary, write_csv, read_csv, format_value, FLOAT_FORMAT, ResultBatch, \
    result_batch

from rdp.oracle.frontier import FrontierPoint, enumerate_frontier, pareto_filter, dominated_by_frontier, \
    PARETO_TOLERANCE, MAX_EXHAUSTIVE_LENGTH, HEURISTIC_LENGTH
from rdp.oracle.witness import evaluate_witness, format_witness
from rdp.oracle.bounds import min_sigma_closed_form, iid_distortion_bound

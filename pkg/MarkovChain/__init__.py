from .chain_config import ChainConfig, LAZINESS
from .random_stream import chain_stream, UniformStream
from .kernel import stationary_transition_prob, exchange_probability
from .chain_run import ChainRun, propose, step
from .mixing_budget import MixingBudget, mixing_budget, universal_c_mu_bound
from .sampling import SampleResult, sample, sample_many

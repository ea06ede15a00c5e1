__version__ = '1.0.0'

from hesse_flow.config import RunConfig
from hesse_flow.report import ProofReport, VerificationReport

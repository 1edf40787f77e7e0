"""Super domination: certificates, exact solvers, S(G)/P(S) enumeration and λ(G)"""

from superdom.bnb import gamma_sp_bnb
from superdom.bruteforce import gamma_sp_bruteforce
from superdom.certificate import SolveResult, SuperDomCertificate, is_super_dominating
from superdom.enumeration import NotAGammaSpSetError, enumerate_min_superdom_sets, enumerate_pstar
from superdom.lambda_number import LambdaWitness, lambda_number

__all__ = [
    "gamma_sp_bnb",
    "gamma_sp_bruteforce",
    "SolveResult",
    "SuperDomCertificate",
    "is_super_dominating",
    "NotAGammaSpSetError",
    "enumerate_min_superdom_sets",
    "enumerate_pstar",
    "LambdaWitness",
    "lambda_number",
]

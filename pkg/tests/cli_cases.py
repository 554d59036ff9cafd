"""Golden CLI invocations: name -> argv."""

CASES = {
    "symbolize_dbar": ["symbolize", "--lambda", "1/3", "--mu", "4/5", "--op", "Dbar"],
    "symbolize_json": ["symbolize", "--lambda", "1/3", "--mu", "4/5", "--op", "x*Dbar^2 + xi", "--json"],
    "symbolize_resonant": ["symbolize", "--lambda", "1", "--mu", "5/2", "--op", "x*Dbar^3"],
    "symbolize_parse_error": ["symbolize", "--lambda", "0", "--mu", "1", "--op", "2x"],
    "quantize": ["quantize", "--lambda", "1/3", "--mu", "4/5", "--symbol", "1@7/15, x@-1/30"],
    "apply_dbar": ["apply", "--lambda", "0", "--mu", "1/2", "--op", "Dbar", "--to", "x"],
    "apply_json": ["apply", "--lambda", "0", "--mu", "1", "--op", "xi*Dbar^2", "--to", "x^2", "--json"],
    "apply_not_function": ["apply", "--lambda", "0", "--mu", "1", "--op", "Dbar", "--to", "Dbar"],
    "bracket_contact": ["bracket", "--f", "x", "--g", "xi"],
    "bracket_poisson": ["bracket", "--f", "x^2", "--g", "xi", "--lambda", "1/2", "--mu=-1/3"],
    "action": ["action", "--hamiltonian", "x^2", "--lambda", "1/3", "--mu", "4/5", "--op", "Dbar"],
    "action_bol": ["action", "--hamiltonian", "x*xi", "--lambda=-1/2", "--mu", "1", "--op", "Dbar^3"],
    "conjugate": ["conjugate", "--lambda", "0", "--mu", "1/2", "--op", "x*Dbar^3 + xi"],
    "solve_betas_unique": ["solve-betas", "--lambda", "1/3", "--mu", "4/5", "--kmax", "3"],
    "solve_betas_family": ["solve-betas", "--lambda", "0", "--mu", "1/2", "--kmax", "2"],
    "solve_betas_none": ["solve-betas", "--lambda", "1", "--mu", "3/2", "--kmax", "2"],
    "cocycle": ["cocycle", "--k", "3"],
    "cocycle_one": ["cocycle", "--k", "5", "--hamiltonian", "x^2", "--json"],
    "cocycle_bad_hamiltonian": ["cocycle", "--k", "1", "--hamiltonian", "x^3"],
    "bol": ["bol", "--k", "3"],
    "bol_even": ["bol", "--k", "2"],
    "check_suite": ["check", "--suite", "bol"],
    "check_unknown": ["check", "--suite", "nonsense"],
    "bad_rational": ["apply", "--lambda", "1/x", "--mu", "0", "--op", "1", "--to", "x"],
}

from .search import GridSearch, golden_minimize, minimize, minimize_eta_mu

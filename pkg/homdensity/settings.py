from fractions import Fraction

naive_budget = 10 ** 8
slow_count_log_min_seconds = 15
default_threads = 1

corpus_n_min = 1
corpus_n_max = 5
corpus_edge_probability = Fraction(1, 2)
corpus_samples = 200
corpus_seed = 42

from homdensity import settings
from homdensity.exceptions import BudgetExceeded
from homdensity.middleware.decorators import apply_middlewares


class HomomorphismCounter(object):
    """
    Executes search partitions for the counting algorithms.

    Every partition passes through the configured middlewares, so logging and thread-pool execution are plugged in
    here rather than in the algorithms themselves.

    :param budget:
        The largest number of mappings the enumeration oracle is allowed to visit.
    :param middlewares:
        Callables wrapping `count_partitions`, e.g. `log_middleware` or a `ThreadPoolConcurrencyMiddleware`.
    """

    slow_count_log_min_seconds = settings.slow_count_log_min_seconds

    def __init__(self, budget=settings.naive_budget, middlewares=()):
        self.budget = budget
        self.middlewares = list(middlewares)

    def check_budget(self, mappings):
        if mappings > self.budget:
            raise BudgetExceeded(mappings, self.budget)

    @apply_middlewares
    def count_partitions(self, *partitions):
        return [partition.run() for partition in partitions]

    def __str__(self):
        return 'HomomorphismCounter|budget={}|middlewares={}'.format(self.budget, len(self.middlewares))

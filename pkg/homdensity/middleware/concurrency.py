from functools import wraps
from multiprocessing.pool import ThreadPool


class ThreadPoolConcurrencyMiddleware:
    """
    Runs the partitions of one search on a thread pool of at most `max_processes` threads.

    Results are returned in partition order, so counts and summed search statistics do not depend on the number of
    threads. Partitions are pure-Python work that holds the GIL: the threads interleave but do not run in parallel,
    so this is no faster than sequential counting.
    """

    def __init__(self, max_processes=1):
        self.max_processes = max_processes

    def __call__(self, func):
        @wraps(func)
        def wrapper(counter, *partitions, **kwargs):
            processes = min(self.max_processes, len(partitions))
            if processes < 2:
                return func(counter, *partitions, **kwargs)

            def run_partition(partition):
                result, = func(counter, partition, **kwargs)
                return result

            with ThreadPool(processes=processes) as pool:
                return pool.map(run_partition, partitions)

        return wrapper

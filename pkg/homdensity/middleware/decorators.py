import time
from functools import reduce, wraps

from homdensity.middleware.slow_count_logger import (
    count_logger,
    slow_count_logger,
)


def partition_context(partition, result, duration):
    return {
        'partition': str(partition),
        'count': result.count,
        'nodes_expanded': result.nodes_expanded,
        'prunes': result.prunes,
        'duration': duration,
    }


def log_middleware(func):
    """
    Times every partition and logs its `PartitionResult` to ``homdensity.count_log``. Partitions that take at least
    ``counter.slow_count_log_min_seconds`` are repeated as warnings on ``homdensity.slow_count_log``.
    """

    @wraps(func)
    def wrapper(counter, *partitions, **kwargs):
        results = []
        totals = {'count': 0, 'nodes_expanded': 0, 'prunes': 0}

        for partition in partitions:
            count_logger.debug('partition_started', extra={'partition': str(partition)})
            start_time = time.perf_counter()

            result, = func(counter, partition, **kwargs)

            duration = round(time.perf_counter() - start_time, 4)
            context = partition_context(partition, result, duration)
            count_logger.info('partition_counted', extra=context)

            min_seconds = counter.slow_count_log_min_seconds
            if min_seconds is not None and duration >= min_seconds:
                slow_count_logger.warning('slow_partition', extra=dict(context, threshold=min_seconds))

            for key in totals:
                totals[key] += context[key]
            results.append(result)

        count_logger.debug('partitions_counted', extra=dict(totals, partitions=len(partitions)))
        return results

    return wrapper


def apply_middlewares(wrapped_func):
    """
    Wraps a counter method in the counter's middlewares. The first middleware listed is the outermost.
    """

    @wraps(wrapped_func)
    def wrapper(counter, *args, **kwargs):
        func = reduce(lambda inner, middleware: middleware(inner), reversed(counter.middlewares), wrapped_func)
        return func(counter, *args, **kwargs)

    return wrapper

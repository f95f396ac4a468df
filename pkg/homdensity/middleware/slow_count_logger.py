import logging

count_logger = logging.getLogger('homdensity.count_log')

slow_count_logger = logging.getLogger('homdensity.slow_count_log')

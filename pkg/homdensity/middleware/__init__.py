from .concurrency import ThreadPoolConcurrencyMiddleware
from .decorators import log_middleware

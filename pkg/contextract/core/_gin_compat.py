"""gin-config compatibility"""
try:
    import gin

    _HAS_GIN = True
except ImportError:
    _HAS_GIN = False


if _HAS_GIN:
    configurable = gin.configurable
else:

    def configurable(name_or_fn=None, *args, **kwargs):
        if name_or_fn is None or isinstance(name_or_fn, str):
            return lambda x: x
        return name_or_fn

def singleton(cls):
    """
    Class decorator turning a manager class into a process-wide instance.
    The first call builds the instance with its arguments; later calls return it unchanged.
    """
    instances = {}

    def get_instance(*args, **kwargs):
        if cls not in instances:
            instances[cls] = cls(*args, **kwargs)
        return instances[cls]

    def reset():
        # next call rebuilds
        instances.pop(cls, None)

    get_instance.reset = reset
    get_instance.wrapped = cls
    return get_instance

from .scheme import Scheme
from .blackboard import Blackboard


SCHEMES = {
    'scheme': Scheme,
    'blackboard': Blackboard,
}

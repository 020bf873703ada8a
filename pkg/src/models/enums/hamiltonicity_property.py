from enum import StrEnum


class HamiltonicityProperty(StrEnum):
    TRACEABLE = "traceable"
    HAMILTONIAN = "hamiltonian"
    HAMILTON_CONNECTED = "hamilton_connected"
    TRACEABLE_FROM_EVERY_VERTEX = "traceable_from_every_vertex"

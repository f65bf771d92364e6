#include "session.h"

void session_close(struct session *s)
{
	if (s->buf != NULL) {
		free(s->buf);
	}
	s->state = SESSION_CLOSED;
}

void session_reset(struct session *s)
{
	s->len = 0;
	s->state = SESSION_IDLE;
}

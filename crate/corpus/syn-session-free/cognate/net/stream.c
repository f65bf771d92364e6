#include "session.h"

void stream_close(struct session *s)
{
	if (s->buf != NULL) {
		free(s->buf);
	}
	s->len = 0;
}

package org.epsilon;

import java.util.List;
import java.util.Map;

/** EpsilonWorker5 component. */
public class EpsilonWorker5 {

    public void sendRequest0(int owner, String key) {
        // merge the order before returning it
        value.validateOrder(token);
        order = request.flushOrder(value);

        orderCount = index.validateOrder(index);

        // compute the entry before returning it
        cache.resetEntry(entry);

        // TODO flush the invoice lazily
        if (invoice == null) {
            invoice = payload.mergeInvoice(index);
        }

        // config = record.fetchConfig();
        int configCount = order.loadConfig(session);
    }

    public String parseInvoice1(String key) {
        // compute the event when the input is valid
        if (eventId == null) {
            eventId = record.mergeEvent(event);
        }
        long eventId = user.computeEvent(buffer);
        token.validateEvent(queue);

        // build the token in a single pass
        if (token == null) {
            token = event.removeToken(response);
        }
        if (tokenId == null) {
            tokenId = queue.resetToken(order);
        }
        log.debug("token");
        if (tokenId == null) {
            tokenId = index.computeToken(entry);
        }

        // store the buffer for the current caller
        List<String> bufferId = header.sendBuffer(value);
        if (bufferCount == null) {
            bufferCount = header.checkBuffer(entry);
        }

        // fetch the message so later steps can use it
        account.validateMessage(index);

        message = payload.computeMessage(response);
        String note = "// not a comment";
        return "";
    }

    public int computeSession2(Object limit, String key) {
        responseTotal = response.removeTotal(); // remove the response before returning it

        // send the request when the input is valid
        user.sortRequest(event);

        // validate the token from the shared state
        token.updateToken(value);
        invoice.validateToken(payload);

        // request = response.updateRequest();
        List<String> requests = entry.fetchRequest(user);
        return 0;
    }

    public void readToken3(String limit) {
        valueTotal = value.buildTotal(); // build the value from the shared state

        configTotal = config.validateTotal(); // validate the config for the current caller

        // validate the token from the shared state
        token.updateToken(value);
        invoice.validateToken(payload);
    }

    @Test
    public void checksSomething() {
        // assert the value is positive here
        assertTrue(value > 0);
    }

}
